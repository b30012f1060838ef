"""Symplectic generators, Siegel Bruhat decomposition and the x-function."""

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from metaplectic import exact
from metaplectic.harness import RandomElements
from metaplectic.scalars import REAL, Place
from metaplectic.spgroup import (
    bruhat_decompose,
    cell_rank,
    generator,
    is_siegel,
    is_symplectic,
    siegel_det,
    sigma,
    w_Y,
    x_function,
    x_value,
)


@st.composite
def sp_elements(draw, n_max=4, length=6):
    n = draw(st.integers(1, n_max))
    gen = RandomElements(random.Random(draw(st.integers(0, 2**32))))
    return gen.sp(n, length)


@st.composite
def parabolics(draw, n):
    gen = RandomElements(random.Random(draw(st.integers(0, 2**32))))
    return gen.parabolic(n)


def test_generator_examples():
    assert exact.equal(generator(1, "sigma", [1]), exact.mat([[0, -1], [1, 0]]))
    assert exact.equal(generator(3, "m_n", exact.identity(3)), exact.identity(6))
    J = generator(2, "J", 2)
    assert exact.equal(J[:2, :2], exact.mat([[0, -1], [1, 0]]))


def test_generators_are_symplectic():
    n = 3
    a = exact.mat([[1, 2], [0, 3]])
    specs = [
        ("m", a), ("m_n", exact.mat([[1, 0, 1], [2, 1, 0], [0, 0, -1]])),
        ("n_b", exact.mat([[1, -2], [0, 3]])), ("n_c", exact.mat([[1, 2], [2, -1]])),
        ("sigma", [1, 3]), ("a", [2]), ("w_Y", 2), ("iota", 1, 1, 1, exact.mat([[5]])),
        ("J", 3), ("kappa", 2),
    ]
    for name, *args in specs:
        assert is_symplectic(generator(n, name, *args)), name


def test_generator_errors():
    with pytest.raises(ValueError):
        generator(2, "m", exact.mat([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        generator(2, "n_c", exact.mat([[0, 1], [2, 0]]))
    with pytest.raises(ValueError):
        generator(2, "sigma", [3])


def test_sigma_action():
    n = 3
    s = sigma([2], n)
    e = exact.identity(2 * n)
    assert exact.equal(s @ e[:, [1]], e[:, [n + 1]])
    assert exact.equal(s @ e[:, [n + 1]], -e[:, [1]])
    assert exact.equal(s @ e[:, [0]], e[:, [0]])


def test_bruhat_examples():
    n = 3
    s = sigma([1, 3], n)
    p1, S, p2 = bruhat_decompose(s)
    assert S == (1, 3) and exact.equal(p1, exact.identity(6)) and exact.equal(p2, exact.identity(6))
    g = generator(n, "n_c", exact.mat([[1, 2, 0], [2, 0, 1], [0, 1, 1]])) @ \
        generator(n, "m_n", exact.mat([[1, 1, 0], [0, 2, 0], [0, 0, 1]]))
    p1, S, p2 = bruhat_decompose(g)
    assert S == () and exact.equal(p1, g) and exact.equal(p2, exact.identity(6))
    w = w_Y(1, 1)
    assert exact.equal(w, exact.mat([[0, 1], [-1, 0]]))
    p1, S, p2 = bruhat_decompose(w)
    assert S == (1,) and x_function(w, 5).rep == x_function(generator(1, "m", [[-1]]), 5).rep


def test_x_function_examples():
    a = exact.mat([[2, 1], [0, 3]])
    for v in [Place(2), Place(3), REAL]:
        assert x_function(generator(2, "m_n", a), v).rep == x_function(
            generator(1, "m", [[6]]), v).rep
        assert x_function(sigma([1], 2), v).rep == 1
        for n in range(1, 5):
            assert x_function(w_Y(n, n), v) == x_function(generator(1, "m", [[(-1) ** n]]), v)


@given(sp_elements())
def test_bruhat_reconstruction(g):
    p1, S, p2 = bruhat_decompose(g)
    n = g.shape[0] // 2
    assert is_siegel(p1) and is_siegel(p2)
    assert exact.equal(p1 @ sigma(S, n) @ p2, g)
    assert len(S) == cell_rank(g) == exact.rank(g[n:, :n])


@given(sp_elements(), st.data(), st.sampled_from([Place(2), Place(3), Place(5), REAL]))
def test_x_function_double_coset_invariance(g, data, v):
    n = g.shape[0] // 2
    p, q = data.draw(parabolics(n)), data.draw(parabolics(n))
    lhs = x_function(p @ g @ q, v)
    rhs = x_function(p, v) * x_function(g, v) * x_function(q, v)
    assert lhs == rhs
    assert x_value(p) == siegel_det(p)
