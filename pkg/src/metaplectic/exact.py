"""Exact rational linear algebra on numpy object arrays of ``Fraction``.

Every matrix in the package is a 2-d ``numpy.ndarray`` with ``dtype=object``
whose entries are ``fractions.Fraction``.  numpy supplies slicing, ``@`` and
stacking; the routines here supply the pieces that need exact pivoting.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Q",
    "frac",
    "mat",
    "identity",
    "zeros",
    "block_diag",
    "is_zero",
    "equal",
    "det",
    "inv",
    "rank",
    "rref",
    "solve",
    "nullspace",
    "matpow",
    "to_strings",
    "from_strings",
]


def frac(x) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float) and x.is_integer():
        return Fraction(int(x))
    raise TypeError(f"cannot make an exact rational from {x!r}")


Q = frac


def mat(rows: Iterable[Iterable]) -> np.ndarray:
    rows = [[frac(x) for x in row] for row in rows]
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != out.shape[1]:
            raise ValueError("ragged matrix")
        out[i, :] = row
    return out


def zeros(r: int, c: int | None = None) -> np.ndarray:
    c = r if c is None else c
    out = np.empty((r, c), dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def block_diag(*blocks: np.ndarray) -> np.ndarray:
    size = sum(b.shape[0] for b in blocks)
    out = zeros(size)
    k = 0
    for b in blocks:
        m = b.shape[0]
        out[k:k + m, k:k + m] = b
        k += m
    return out


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def rref(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = a.copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i, c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = m[r] / m[r, c]
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return len(rref(a)[1])


def det(a: np.ndarray) -> Fraction:
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("det of a non-square matrix")
    m = a.copy()
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i, c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[[c, piv]] = m[[piv, c]]
            d = -d
        d *= m[c, c]
        for i in range(c + 1, n):
            if m[i, c] != 0:
                m[i] = m[i] - (m[i, c] / m[c, c]) * m[c]
    return d


def inv(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([a, identity(n)], axis=1)
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return red[:, n:]


def solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One exact solution X of ``a @ X == b`` (free variables zero), or None."""
    rows, cols = a.shape
    aug = np.concatenate([a, b], axis=1)
    red, pivots = rref(aug)
    if any(p >= cols for p in pivots):
        return None
    x = zeros(cols, b.shape[1])
    for r, p in enumerate(pivots):
        x[p] = red[r, cols:]
    return x


def nullspace(a: np.ndarray) -> list[np.ndarray]:
    """Basis of the right kernel of ``a`` as column vectors."""
    rows, cols = a.shape
    red, pivots = rref(a)
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        v = zeros(cols, 1)
        v[free, 0] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p, 0] = -red[r, free]
        basis.append(v)
    return basis


def matpow(a: np.ndarray, e: int) -> np.ndarray:
    if e < 0:
        a, e = inv(a), -e
    out = identity(a.shape[0])
    base = a
    while e:
        if e & 1:
            out = out @ base
        base = base @ base
        e >>= 1
    return out


def to_strings(a: np.ndarray) -> list[list[str]]:
    return [[f"{x.numerator}/{x.denominator}" for x in row] for row in a]


def from_strings(rows: Sequence[Sequence]) -> np.ndarray:
    return mat(rows)
