"""Odd orthogonal spaces V^+ and V^- of dimension 2n+1 and discriminant 1.

V^+ has basis (x_1..x_n, x_0, x*_1..x*_n) with b(x_i, x*_j) = delta_ij and
q(x_0) = 1.  Gram matrices are those of the bilinear form b, q(v) = b(v,v)/2.

V^- depends on the place.  It is H^{n-1} ⊥ T with T an anisotropic ternary
<a, b, -ab> (values of q) whose signed discriminant is 1; T sits at the
positions of x_n, x_0, x*_n.  An anisotropic ternary of discriminant 1 never
represents 1, so V^- has no vector with q(x_0) = 1 at n = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count

import numpy as np

from . import exact
from .qforms import QuadForm, diagonal_form, is_isotropic, witt_index
from .scalars import REAL, Place, PlaceLike, SquareClass, as_place, square_class

__all__ = [
    "OrthSpace",
    "orth_space",
    "signed_discriminant",
    "discriminant",
    "max_isotropic_dim",
    "is_special_orthogonal",
    "so_generator",
]


@dataclass(frozen=True, eq=False)
class OrthSpace:
    n: int
    epsilon: int
    gram: np.ndarray
    place: Place | None = None

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    def form(self) -> QuadForm:
        return QuadForm(self.gram)


def _split_gram(n: int) -> np.ndarray:
    g = exact.zeros(2 * n + 1)
    for i in range(n):
        g[i, n + 1 + i] = g[n + 1 + i, i] = Fraction(1)
    g[n, n] = Fraction(2)
    return g


def _anisotropic_ternary(v: Place) -> tuple[Fraction, Fraction]:
    """The first (a, b) in a fixed search order with <a, b, -ab> anisotropic at v."""
    if v.is_real:
        return Fraction(-1), Fraction(-1)
    for bound in count(1):
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                if a == 0 or b == 0 or max(abs(a), abs(b)) != bound:
                    continue
                if not is_isotropic(diagonal_form([a, b, -a * b]), v):
                    return Fraction(a), Fraction(b)


def signed_discriminant(gram: np.ndarray) -> Fraction:
    """(-1)^{m(m-1)/2} det(q) for q = b/2 on an m-dimensional space."""
    m = gram.shape[0]
    return (-1) ** (m * (m - 1) // 2) * exact.det(gram) / Fraction(2) ** m


def discriminant(space: OrthSpace, v: PlaceLike) -> SquareClass:
    return square_class(signed_discriminant(space.gram), v)


def orth_space(n: int, epsilon: int = 1, place: PlaceLike | None = None) -> OrthSpace:
    """V^epsilon of dimension 2n+1; V^- needs the place it is anisotropic-twisted at."""
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be ±1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if epsilon == 1:
        v = as_place(place) if place is not None else None
        space = OrthSpace(n, 1, _split_gram(n), v)
    else:
        if n == 0:
            raise ValueError("V^- needs n >= 1")
        if place is None:
            raise ValueError("V^- is only defined relative to a place")
        v = as_place(place)
        a, b = _anisotropic_ternary(v)
        gram = _split_gram(n)
        j, z, js = n - 1, n, 2 * n
        gram[j, js] = gram[js, j] = Fraction(0)
        gram[j, j], gram[z, z], gram[js, js] = 2 * a, 2 * b, -2 * a * b
        space = OrthSpace(n, -1, gram, v)
    check = space.place if space.place is not None else REAL
    if discriminant(space, check).rep != 1:
        raise ArithmeticError("constructed space does not have discriminant 1")
    if max_isotropic_dim(space) != n - (1 - epsilon) // 2:
        raise ArithmeticError("constructed space has the wrong Witt index")
    return space


def max_isotropic_dim(space: OrthSpace, v: PlaceLike | None = None) -> int:
    """Witt index of the space at v (default: the space's own place, else real)."""
    if space.n == 0 and space.epsilon == 1:
        return 0
    if v is None:
        v = space.place if space.place is not None else REAL
    return witt_index(space.form(), v)


def is_special_orthogonal(space: OrthSpace, g: np.ndarray) -> bool:
    return (g.shape == space.gram.shape and exact.equal(g.T @ space.gram @ g, space.gram)
            and exact.det(g) == 1)


def _blocks(n: int, k: int):
    xs = list(range(k))
    middle = list(range(k, n + 1)) + list(range(n + 1 + k, 2 * n + 1))
    xstar = list(range(n + 1, n + 1 + k))
    return xs, middle, xstar


def so_generator(space: OrthSpace, name: str, arg) -> np.ndarray:
    """``"l"``(a), ``"u_b"``(b), ``"u_c"``(c) or ``"w_X"``(k) in SO(V^+).

    a is k x k invertible; b is k x (2(n-k)+1), a map V_{n-k} -> X_k;
    c is k x k alternating, a map X*_k -> X_k.
    """
    if space.epsilon != 1:
        raise ValueError("generators are provided for the split space only")
    n = space.n
    if name == "w_X":
        k = int(arg)
        if not 1 <= k <= n:
            raise ValueError("w_X needs 1 <= k <= n")
        xs, middle, xstar = _blocks(n, k)
        g = exact.zeros(2 * n + 1)
        g[np.ix_(xs, xstar)] = -exact.identity(k)
        g[np.ix_(xstar, xs)] = -exact.identity(k)
        for j in middle:
            g[j, j] = Fraction((-1) ** k)
        return g
    A = arg if isinstance(arg, np.ndarray) else exact.mat(arg)
    k = A.shape[0]
    if not 1 <= k <= n:
        raise ValueError("block size must satisfy 1 <= k <= n")
    xs, middle, xstar = _blocks(n, k)
    g = exact.identity(2 * n + 1)
    if name == "l":
        if A.shape != (k, k) or exact.det(A) == 0:
            raise ValueError("l(a) needs an invertible square a")
        g[np.ix_(xs, xs)] = A
        g[np.ix_(xstar, xstar)] = exact.inv(A).T
        return g
    if name == "u_c":
        if A.shape != (k, k) or not exact.equal(A.T, -A):
            raise ValueError("u_c(c) needs an alternating c")
        g[np.ix_(xs, xstar)] = A
        return g
    if name == "u_b":
        if A.shape != (k, len(middle)):
            raise ValueError("u_b(b) needs b of shape k x (2(n-k)+1)")
        g0 = space.gram[np.ix_(middle, middle)]
        beta = -exact.inv(g0) @ A.T
        N = exact.zeros(2 * n + 1)
        N[np.ix_(xs, middle)] = A
        N[np.ix_(middle, xstar)] = beta
        return g + N + (N @ N) / 2
    raise ValueError(f"unknown generator {name!r}")
