"""Sp(2n) over Q in the basis (y_1..y_n, y*_1..y*_n).

Matrices act on column vectors; column j is the image of the j-th basis vector.
The symplectic form is <y_i, y*_j> = delta_ij, so the Gram matrix is
[[0, 1], [-1, 0]].  The Siegel parabolic is the stabiliser of Y = span(y_i),
i.e. the matrices whose lower-left n x n block vanishes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

import numpy as np

from . import exact
from .scalars import PlaceLike, SquareClass, square_class

__all__ = [
    "omega",
    "is_symplectic",
    "is_siegel",
    "siegel_det",
    "m",
    "m_n",
    "n_b",
    "n_c",
    "sigma",
    "a_S",
    "w_Y",
    "iota_gl",
    "J_matrix",
    "kappa_matrix",
    "generator",
    "BruhatForm",
    "bruhat_decompose",
    "cell_rank",
    "x_value",
    "x_function",
]


def omega(n: int) -> np.ndarray:
    om = exact.zeros(2 * n)
    for i in range(n):
        om[i, n + i] = Fraction(1)
        om[n + i, i] = Fraction(-1)
    return om


def is_symplectic(g: np.ndarray) -> bool:
    n2 = g.shape[0]
    if g.shape != (n2, n2) or n2 % 2:
        return False
    om = omega(n2 // 2)
    return exact.equal(g.T @ om @ g, om)


def _n(g: np.ndarray) -> int:
    return g.shape[0] // 2


def is_siegel(g: np.ndarray) -> bool:
    n = _n(g)
    return exact.is_zero(g[n:, :n])


def siegel_det(p: np.ndarray) -> Fraction:
    """det(p|_Y) for p in the Siegel parabolic."""
    n = _n(p)
    return exact.det(p[:n, :n])


def _index_sets(n: int, k: int):
    """Positions of Y_k, W_{n-k}, Y*_k in the (y, y*) ordering."""
    ys = list(range(k))
    w0 = list(range(k, n)) + list(range(n + k, 2 * n))
    ystar = list(range(n, n + k))
    return ys, w0, ystar


def _embed_blocks(n: int, k: int, blocks: dict) -> np.ndarray:
    """Assemble a 2n x 2n matrix from blocks indexed by ('Y'|'W'|'Ys') pairs."""
    ys, w0, ystar = _index_sets(n, k)
    idx = {"Y": ys, "W": w0, "Ys": ystar}
    g = exact.zeros(2 * n)
    for (r, c), blk in blocks.items():
        g[np.ix_(idx[r], idx[c])] = blk
    return g


def m(a, n: int | None = None) -> np.ndarray:
    """m(a) for a in GL(Y_k): a on Y_k, (a*)^-1 on Y*_k, identity on W_{n-k}."""
    a = a if isinstance(a, np.ndarray) else exact.mat(a)
    k = a.shape[0]
    n = k if n is None else n
    if not 1 <= k <= n:
        raise ValueError(f"m(a) needs 1 <= k <= n, got k={k}, n={n}")
    if exact.det(a) == 0:
        raise ValueError("m(a) needs an invertible a")
    return _embed_blocks(n, k, {("Y", "Y"): a, ("W", "W"): exact.identity(2 * (n - k)),
                                ("Ys", "Ys"): exact.inv(a).T})


def m_n(a) -> np.ndarray:
    """Levi element diag(a, a^-T) of the Siegel parabolic."""
    return m(a)


def n_b(b, n: int) -> np.ndarray:
    """Unipotent n^b(b), b in Hom(W_{n-k}, Y_k) given as a k x 2(n-k) matrix."""
    b = b if isinstance(b, np.ndarray) else exact.mat(b)
    k = b.shape[0]
    n0 = n - k
    if b.shape != (k, 2 * n0) or not 1 <= k <= n:
        raise ValueError("n^b(b) needs b of shape k x 2(n-k)")
    om0 = omega(n0)
    beta = om0 @ b.T
    nil = _embed_blocks(n, k, {("Y", "W"): b, ("W", "Ys"): beta})
    return exact.identity(2 * n) + nil + (nil @ nil) / 2


def n_c(c, n: int | None = None) -> np.ndarray:
    """Unipotent n^c(c), c in Sym(Y*_k, Y_k)."""
    c = c if isinstance(c, np.ndarray) else exact.mat(c)
    k = c.shape[0]
    n = k if n is None else n
    if not exact.equal(c, c.T):
        raise ValueError("n^c(c) needs a symmetric c")
    return exact.identity(2 * n) + _embed_blocks(n, k, {("Y", "Ys"): c})


def _check_subset(S: Iterable[int], n: int) -> tuple[int, ...]:
    S = tuple(sorted(set(int(i) for i in S)))
    if any(not 1 <= i <= n for i in S):
        raise ValueError(f"subset {S} not inside 1..{n}")
    return S


def sigma(S: Iterable[int], n: int) -> np.ndarray:
    """sigma_S: y_i -> y*_i, y*_i -> -y_i for i in S; identity elsewhere."""
    S = _check_subset(S, n)
    g = exact.identity(2 * n)
    for i in S:
        j = i - 1
        g[j, j] = g[n + j, n + j] = Fraction(0)
        g[n + j, j] = Fraction(1)
        g[j, n + j] = Fraction(-1)
    return g


def a_S(S: Iterable[int], n: int) -> np.ndarray:
    """a_S: y_i -> -y_i, y*_i -> -y*_i for i in S."""
    S = _check_subset(S, n)
    g = exact.identity(2 * n)
    for i in S:
        g[i - 1, i - 1] = g[n + i - 1, n + i - 1] = Fraction(-1)
    return g


def w_Y(k: int, n: int) -> np.ndarray:
    if not 1 <= k <= n:
        raise ValueError("w_Y needs 1 <= k <= n")
    one = exact.identity(k)
    return _embed_blocks(n, k, {("Y", "Ys"): one,
                                ("W", "W"): (-1) ** k * exact.identity(2 * (n - k)),
                                ("Ys", "Y"): -one})


def iota_gl(r: int, s: int, t: int, A) -> np.ndarray:
    """Embed A in GL_s as diag(1_r, A, 1_t) in GL_{r+s+t}."""
    A = A if isinstance(A, np.ndarray) else exact.mat(A)
    if A.shape != (s, s):
        raise ValueError("iota needs an s x s matrix")
    return exact.block_diag(*[b for b in (exact.identity(r), A, exact.identity(t)) if b.size])


def J_matrix(k: int, n: int) -> np.ndarray:
    """Antidiagonal k x k matrix with entries (-1)^(n+1), ..., (-1)^(n+k) read upwards."""
    J = exact.zeros(k)
    for i in range(k):
        J[i, k - 1 - i] = Fraction((-1) ** (n + 1 + i))
    return J


def kappa_matrix(l: int) -> np.ndarray:
    """-1 on the superdiagonal and 1 in the lower-left corner."""
    K = exact.zeros(l)
    for i in range(l - 1):
        K[i, i + 1] = Fraction(-1)
    K[l - 1, 0] = Fraction(1)
    return K


def generator(n: int, name: str, *args) -> np.ndarray:
    """Named constructors; every result lies in Sp(2n).

    ``"m"(a)``, ``"m_n"(a)``, ``"n_b"(b)``, ``"n_c"(c)``, ``"sigma"(S)``,
    ``"a"(S)``, ``"w_Y"(k)``; the GL-valued ``"iota"(r, s, t, A)``,
    ``"J"(k)`` and ``"kappa"(l)`` are placed in the Siegel Levi via ``m_n``
    (padded by the identity on the last coordinates).
    """
    if name == "m":
        return m(args[0], n)
    if name == "m_n":
        a = args[0] if isinstance(args[0], np.ndarray) else exact.mat(args[0])
        if a.shape[0] != n:
            raise ValueError("m_n needs an n x n matrix")
        return m_n(a)
    if name == "n_b":
        return n_b(args[0], n)
    if name == "n_c":
        return n_c(args[0], n)
    if name == "sigma":
        return sigma(args[0], n)
    if name == "a":
        return a_S(args[0], n)
    if name == "w_Y":
        return w_Y(args[0], n)
    if name == "iota":
        r, s, t, A = args
        if r + s + t != n:
            raise ValueError("iota(r, s, t) needs r + s + t = n")
        return m_n(iota_gl(r, s, t, A))
    if name == "J":
        k = args[0]
        return m_n(iota_gl(0, k, n - k, J_matrix(k, n)))
    if name == "kappa":
        l = args[0]
        return m_n(iota_gl(0, l, n - l, kappa_matrix(l)))
    raise ValueError(f"unknown generator {name!r}")


class BruhatForm(NamedTuple):
    p1: np.ndarray
    S: tuple[int, ...]
    p2: np.ndarray


def bruhat_decompose(g: np.ndarray) -> BruhatForm:
    """Write g = p1 · sigma_S · p2 with p1, p2 in the Siegel parabolic.

    Columns of the Y -> Y* block are reduced left to right; S is the set of
    pivot columns, so sigma_S and Siegel elements decompose trivially.
    """
    n = _n(g)
    C = g[n:, :n]
    pivots: list[int] = []
    alpha = exact.identity(n)
    for j in range(n):
        col = C[:, [j]]
        if pivots:
            coeffs = exact.solve(C[:, pivots], col)
        else:
            coeffs = None if not exact.is_zero(col) else exact.zeros(0, 1)
        if coeffs is None:
            pivots.append(j)
            continue
        for s, lam in zip(pivots, coeffs[:, 0]):
            alpha[s, j] = -lam
    h = g @ m_n(alpha)
    x = exact.zeros(n)
    if pivots:
        Ch, Dh = h[n:, :n], h[n:, n:]
        sol = exact.solve(Ch[:, pivots], -Dh[:, pivots])
        x[np.ix_(pivots, pivots)] = sol
    S = tuple(j + 1 for j in pivots)
    h2 = h @ n_c(x)
    p1 = h2 @ exact.inv(sigma(S, n))
    p2 = n_c(-x) @ m_n(exact.inv(alpha))
    if not is_siegel(p1):
        raise ArithmeticError("Bruhat elimination failed; is g symplectic?")
    return BruhatForm(p1, S, p2)


def cell_rank(g: np.ndarray) -> int:
    """|S| of the Bruhat cell of g: the rank of its Y -> Y* block."""
    n = _n(g)
    return exact.rank(g[n:, :n])


def x_value(g: np.ndarray) -> Fraction:
    """A representative of det(p1 p2 |_Y) for any Bruhat decomposition of g."""
    p1, _, p2 = bruhat_decompose(g)
    return siegel_det(p1) * siegel_det(p2)


def x_function(g: np.ndarray, v: PlaceLike) -> SquareClass:
    return square_class(x_value(g), v)
