"""Quadratic forms over Q and their local invariants.

A :class:`QuadForm` stores the Gram matrix of the symmetric bilinear form
``b``; the quadratic form itself is ``q(v) = b(v, v) / 2``.  Local
classification (rank, discriminant, Hasse invariant, Witt index) is decided
from a diagonalisation of ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np

from . import exact
from .scalars import (
    AdditiveCharacter,
    DomainError,
    Mu8,
    PlaceLike,
    SquareClass,
    as_place,
    hilbert,
    square_class,
    weil_index,
)

__all__ = [
    "QuadForm",
    "Lagrangian",
    "LocalInvariants",
    "diagonal_form",
    "hyperbolic",
    "orthogonal_sum",
    "diagonalize",
    "hasse_of",
    "invariants",
    "is_isotropic",
    "witt_index",
    "is_split",
    "witt_equivalent",
    "weil_index_form",
    "kashiwara_form",
]


@dataclass(frozen=True, eq=False)
class QuadForm:
    gram: np.ndarray

    def __post_init__(self):
        g = self.gram
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise ValueError("Gram matrix must be square")
        if not exact.equal(g, g.T):
            raise ValueError("Gram matrix must be symmetric")

    @property
    def dim(self) -> int:
        return self.gram.shape[0]

    def __neg__(self) -> "QuadForm":
        return QuadForm(-self.gram)

    def __call__(self, v) -> Fraction:
        v = np.asarray([exact.frac(x) for x in v], dtype=object)
        return (v @ self.gram @ v) / 2

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadForm) and exact.equal(self.gram, other.gram)


def diagonal_form(entries: Sequence) -> QuadForm:
    """The form with Gram diag(entries)."""
    return QuadForm(exact.block_diag(*[exact.mat([[a]]) for a in entries]) if entries
                    else exact.zeros(0))


def hyperbolic(planes: int = 1) -> QuadForm:
    h = exact.mat([[0, 1], [1, 0]])
    return orthogonal_sum(*([QuadForm(h)] * planes))


def orthogonal_sum(*forms: QuadForm) -> QuadForm:
    forms = [f for f in forms if f.dim]
    if not forms:
        return QuadForm(exact.zeros(0))
    return QuadForm(exact.block_diag(*[f.gram for f in forms]))


def diagonalize(q: QuadForm) -> list[Fraction]:
    """Diagonal entries of an orthogonal basis of q modulo its radical."""
    g = q.gram.copy()
    out: list[Fraction] = []
    while g.shape[0]:
        size = g.shape[0]
        piv = next((i for i in range(size) if g[i, i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(size) for j in range(i + 1, size)
                         if g[i, j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + e_j makes b(e_i, e_i) = 2 b(e_i, e_j) != 0
            change = exact.identity(size)
            change[j, i] = Fraction(1)
            g = change.T @ g @ change
            piv = i
        a = g[piv, piv]
        out.append(a)
        rest = [k for k in range(size) if k != piv]
        col = g[np.ix_(rest, [piv])]
        g = g[np.ix_(rest, rest)] - (col @ col.T) / a
    return out


def hasse_of(diag: Sequence, v: PlaceLike) -> int:
    s = 1
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            s *= hilbert(diag[i], diag[j], v)
    return s


@dataclass(frozen=True)
class LocalInvariants:
    rank: int
    disc: SquareClass
    hasse: int


def _invariants_of_diag(diag: Sequence, v) -> LocalInvariants:
    prod = reduce(lambda x, y: x * y, diag, Fraction(1))
    return LocalInvariants(len(diag), square_class(prod, v), hasse_of(diag, v))


def invariants(q: QuadForm, v: PlaceLike) -> LocalInvariants:
    """Rank, discriminant (class of the determinant) and Hasse invariant."""
    return _invariants_of_diag(diagonalize(q), as_place(v))


def _isotropic_from(rank: int, det: Fraction, hasse: int, v) -> bool:
    # Serre, Cours d'arithmétique IV.2.2, with hasse = prod_{i<j} (a_i, a_j).
    if rank <= 1:
        return False
    if rank == 2:
        return square_class(-det, v).rep == 1
    if rank == 3:
        return hilbert(-1, -det, v) == hasse
    if rank == 4:
        return square_class(det, v).rep != 1 or hasse == hilbert(-1, -1, v)
    return True


def is_isotropic(q: QuadForm, v: PlaceLike) -> bool:
    v = as_place(v)
    diag = diagonalize(q)
    if len(diag) < q.dim:
        return True
    if v.is_real:
        return any(a > 0 for a in diag) and any(a < 0 for a in diag)
    inv = _invariants_of_diag(diag, v)
    return _isotropic_from(inv.rank, inv.disc.rep, inv.hasse, v)


def _nondegenerate_witt_index(diag: Sequence, v) -> int:
    if v.is_real:
        return min(sum(a > 0 for a in diag), sum(a < 0 for a in diag))
    rank = len(diag)
    det = reduce(lambda x, y: x * y, diag, Fraction(1))
    hasse = hasse_of(diag, v)
    index = 0
    while _isotropic_from(rank, det, hasse, v):
        # q = q' ⊥ <1, -1>:  det q' = -det q,  hasse q = hasse q' · (det q', -1)
        rank -= 2
        det = -det
        hasse *= hilbert(det, -1, v)
        index += 1
    return index


def witt_index(q: QuadForm, v: PlaceLike) -> int:
    """Dimension of a maximal totally isotropic subspace of q."""
    diag = diagonalize(q)
    radical = q.dim - len(diag)
    return radical + _nondegenerate_witt_index(diag, as_place(v))


def is_split(q: QuadForm, v: PlaceLike) -> bool:
    """True iff the nondegenerate part of q is a sum of hyperbolic planes."""
    diag = diagonalize(q)
    return len(diag) % 2 == 0 and 2 * _nondegenerate_witt_index(diag, as_place(v)) == len(diag)


def witt_equivalent(q1: QuadForm, q2: QuadForm, v: PlaceLike) -> bool:
    return is_split(orthogonal_sum(q1, -q2), v)


def weil_index_form(q: QuadForm, psi: AdditiveCharacter) -> Mu8:
    """gamma(psi ∘ q) for q(v) = b(v, v) / 2, multiplicative over a diagonalisation."""
    diag = diagonalize(q)
    if len(diag) != q.dim:
        raise DomainError("Weil index of a degenerate form")
    out = Mu8(0)
    for a in diag:
        out = out * weil_index(a / 2, psi)
    return out


@dataclass(frozen=True, eq=False)
class Lagrangian:
    """Column span of ``basis`` (2n x n) inside the standard symplectic space."""

    basis: np.ndarray

    def __post_init__(self):
        rows, cols = self.basis.shape
        if rows != 2 * cols:
            raise ValueError("a Lagrangian of a 2n-space needs n basis vectors")
        if exact.rank(self.basis) != cols:
            raise ValueError("Lagrangian basis is not linearly independent")
        if not exact.is_zero(self.basis.T @ _omega(cols) @ self.basis):
            raise ValueError("subspace is not isotropic")

    @property
    def n(self) -> int:
        return self.basis.shape[1]

    def translate(self, g: np.ndarray) -> "Lagrangian":
        return Lagrangian(g @ self.basis)


def _omega(n: int) -> np.ndarray:
    om = exact.zeros(2 * n)
    for i in range(n):
        om[i, n + i] = Fraction(1)
        om[n + i, i] = Fraction(-1)
    return om


def kashiwara_form(l1: Lagrangian, l2: Lagrangian, l3: Lagrangian) -> QuadForm:
    """Q(v1 + v2 + v3) = <v1, v2> + <v2, v3> + <v3, v1> on l1 ⊕ l2 ⊕ l3."""
    n = l1.n
    if l2.n != n or l3.n != n:
        raise DomainError("Lagrangians live in different symplectic spaces")
    om = _omega(n)
    a = [l1.basis, l2.basis, l3.basis]
    gram = exact.zeros(3 * n)
    for i, j in ((0, 1), (1, 2), (2, 0)):
        blk = a[i].T @ om @ a[j]
        gram[i * n:(i + 1) * n, j * n:(j + 1) * n] = blk
        gram[j * n:(j + 1) * n, i * n:(i + 1) * n] = blk.T
    return QuadForm(gram)
