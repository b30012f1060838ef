"""Quadratic forms: diagonalisation, invariants, Witt classes, Weil indices, Kashiwara forms."""

from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from metaplectic import exact
from metaplectic.qforms import (
    Lagrangian,
    QuadForm,
    diagonal_form,
    diagonalize,
    hyperbolic,
    invariants,
    is_isotropic,
    kashiwara_form,
    orthogonal_sum,
    weil_index_form,
    witt_equivalent,
    witt_index,
)
from metaplectic.scalars import REAL, AdditiveCharacter, DomainError, Mu8, Place, canonical_classes
from metaplectic.spgroup import is_symplectic, n_c, sigma
from oracles import represents_zero_mod

PRIMES = [2, 3, 5]
finite_places = st.sampled_from([Place(p) for p in PRIMES])
places = st.sampled_from([Place(p) for p in PRIMES] + [REAL])
small = st.integers(-4, 4)


@st.composite
def sym_forms(draw, max_dim=6, nondegenerate=False):
    d = draw(st.integers(1, max_dim))
    entries = draw(st.lists(small, min_size=d * d, max_size=d * d))
    a = np.array([[Fraction(x) for x in entries[i * d:(i + 1) * d]] for i in range(d)],
                 dtype=object)
    g = a + a.T
    if nondegenerate and exact.det(g) == 0:
        g = g + exact.identity(d) * Fraction(2 * d * 9 + 1)
    return QuadForm(g)


@st.composite
def gl_matrices(draw, d):
    while True:
        entries = draw(st.lists(small, min_size=d * d, max_size=d * d))
        a = exact.mat([entries[i * d:(i + 1) * d] for i in range(d)])
        if exact.det(a) != 0:
            return a


def _congruent(q: QuadForm, a: np.ndarray) -> QuadForm:
    return QuadForm(a.T @ q.gram @ a)


# --- examples ------------------------------------------------------------

def test_diagonalize_examples():
    assert diagonalize(QuadForm(exact.identity(2))) == [1, 1]
    d = diagonalize(QuadForm(exact.mat([[0, 1], [1, 0]])))
    assert len(d) == 2 and invariants(diagonal_form(d), 3) == invariants(diagonal_form([2, -2]), 3)
    assert diagonalize(QuadForm(exact.zeros(3))) == []


def test_invariants_examples():
    inv = invariants(diagonal_form([1, 1]), 2)
    assert (inv.rank, inv.disc.rep, inv.hasse) == (2, 1, 1)
    inv = invariants(diagonal_form([-1, -1]), 2)
    assert (inv.rank, inv.disc.rep, inv.hasse) == (2, 1, -1)


def test_witt_equivalent_examples():
    q = diagonal_form([3, -7, 2])
    assert witt_equivalent(q, q, 5)
    assert witt_equivalent(diagonal_form([1, -1]), QuadForm(exact.zeros(0)), 3)
    assert not witt_equivalent(diagonal_form([1, 1]), diagonal_form([-1, -1]), 2)


def test_weil_index_form_examples():
    for p in PRIMES:
        assert weil_index_form(hyperbolic(), AdditiveCharacter(p)) == Mu8(0)
    with pytest.raises(DomainError):
        weil_index_form(QuadForm(exact.zeros(2)), AdditiveCharacter(3))


# --- invariants are basis-free -------------------------------------------

@given(sym_forms(max_dim=4), gl_matrices(4), places)
def test_invariants_basis_independent(q, a, v):
    a = a[:q.dim, :q.dim]
    if exact.det(a) == 0:
        a = exact.identity(q.dim)
    assert invariants(q, v) == invariants(_congruent(q, a), v)


@given(sym_forms(nondegenerate=True), st.data(), finite_places)
def test_weil_index_form_basis_independent(q, data, v):
    a = data.draw(gl_matrices(q.dim))
    psi = AdditiveCharacter(v.p)
    assert weil_index_form(q, psi) == weil_index_form(_congruent(q, a), psi)


@given(sym_forms(max_dim=3, nondegenerate=True), sym_forms(max_dim=3, nondegenerate=True),
       finite_places, st.sampled_from([1, 2, Fraction(1, 3)]))
def test_weil_index_form_multiplicative(q1, q2, v, shift):
    psi = AdditiveCharacter(v.p, shift)
    assert weil_index_form(orthogonal_sum(q1, q2), psi) == \
        weil_index_form(q1, psi) * weil_index_form(q2, psi)


@given(sym_forms(max_dim=4, nondegenerate=True), st.integers(0, 2), st.integers(0, 2),
       finite_places)
def test_weil_index_form_is_witt_invariant(q, a, b, v):
    psi = AdditiveCharacter(v.p)
    q1 = orthogonal_sum(q, hyperbolic(a)) if a else q
    q2 = orthogonal_sum(q, hyperbolic(b)) if b else q
    assert witt_equivalent(q1, q2, v)
    assert weil_index_form(q1, psi) == weil_index_form(q2, psi)


@given(st.lists(sym_forms(max_dim=3), min_size=3, max_size=3), places)
def test_witt_equivalence_is_an_equivalence(forms, v):
    a, b, c = forms
    assert witt_equivalent(a, a, v)
    assert witt_equivalent(a, b, v) == witt_equivalent(b, a, v)
    if witt_equivalent(a, b, v) and witt_equivalent(b, c, v):
        assert witt_equivalent(a, c, v)


# --- isotropy against a residue search -----------------------------------

def _class_forms(p, dim):
    reps = [int(c) for c in canonical_classes(p)]
    return product(reps, repeat=dim)


@pytest.mark.parametrize("p,dims", [(2, (2, 3, 4, 5)), (3, (2, 3, 4, 5)), (5, (2, 3, 4))])
def test_isotropy_matches_residue_search(p, dims):
    for dim in dims:
        seen = set()
        for coeffs in _class_forms(p, dim):
            key = tuple(sorted(coeffs))
            if key in seen:
                continue
            seen.add(key)
            q = diagonal_form([2 * c for c in coeffs])  # q(x) = sum c_i x_i^2
            brute = represents_zero_mod(list(coeffs), p)
            assert is_isotropic(q, p) == brute, coeffs
            assert (witt_index(q, p) >= 1) == brute, coeffs


def test_real_witt_index():
    assert witt_index(diagonal_form([1, 1, -1, -1, -1]), REAL) == 2
    assert witt_index(diagonal_form([1, 1, 1]), REAL) == 0


# --- Kashiwara form ------------------------------------------------------

def _lagrangians(n):
    Y = Lagrangian(np.vstack([exact.identity(n), exact.zeros(n)]))
    Ys = Lagrangian(np.vstack([exact.zeros(n), exact.identity(n)]))
    out = [Y, Ys]
    for c in ([[1]] if n == 1 else [[1, 2], [2, -1]], [[3]] if n == 1 else [[0, 1], [1, 5]]):
        g = sigma(range(1, n + 1), n) @ n_c(exact.mat(c), n)
        assert is_symplectic(g)
        out.append(Y.translate(g))
    return out


@pytest.mark.parametrize("n", [1, 2])
def test_kashiwara_repeated_argument_is_split(n):
    ls = _lagrangians(n)
    for l, l2 in product(ls, repeat=2):
        for v in [Place(2), Place(3), REAL]:
            q = kashiwara_form(l, l, l2)
            assert witt_equivalent(q, QuadForm(exact.zeros(0)), v)


@pytest.mark.parametrize("n", [1, 2])
def test_kashiwara_cyclic_and_swap(n):
    ls = _lagrangians(n)
    for a, b, c in product(ls, repeat=3):
        q = kashiwara_form(a, b, c)
        for v in [Place(2), Place(3), Place(5), REAL]:
            assert witt_equivalent(q, kashiwara_form(b, c, a), v)
            assert witt_equivalent(-q, kashiwara_form(b, a, c), v)
