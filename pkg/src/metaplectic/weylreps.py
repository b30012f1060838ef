"""Type C_n Weyl combinatorics, simple root vectors and Tits representatives.

The Weyl group of Sp(2n) (and of SO(2n+1)) is the group of signed
permutations of e_1..e_n.  Simple reflections: s_i (i < n) swaps e_i and
e_{i+1}; s_n negates e_n.  Symplectic matrices use the basis
(y_1..y_n, y*_1..y*_n) and orthogonal ones (x_1..x_n, x_0, x*_1..x*_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

import numpy as np

from . import exact
from .mpcover import FactoredWord, MpElement, Parabolic, lift_word, mp_identity, mp_multiply
from .scalars import PlaceLike, as_place, hilbert
from .spgroup import J_matrix, a_S, iota_gl, is_siegel, kappa_matrix, m_n, omega, sigma
from .soodd import orth_space

__all__ = [
    "SP",
    "SO",
    "WeylElementC",
    "ReducedWord",
    "positive_roots",
    "q_word",
    "r_word",
    "wM_word",
    "RootVector",
    "root_vector",
    "exp_nilpotent",
    "tits_element",
    "ls_matrix",
    "ls_representative",
    "eps_ls",
    "target_matrix",
    "target_representative",
    "chain_v",
    "chain_u",
    "chain_z",
    "v_closed",
    "z_closed",
    "p_closed",
    "p_prime_closed",
    "z_product_closed",
    "v_product_closed",
    "lift_omegas",
    "chain_representative",
]

SP = "sp"
SO = "so"


def _check_group(group: str) -> str:
    g = str(group).lower()
    if g not in (SP, SO):
        raise ValueError(f"group must be 'sp' or 'so', not {group!r}")
    return g


@dataclass(frozen=True)
class WeylElementC:
    """e_i -> signs[i] e_{perm[i]} (0-based lists)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(x) for x in self.perm))
        object.__setattr__(self, "signs", tuple(int(x) for x in self.signs))
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ValueError("not a signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be ±1")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "WeylElementC":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def simple(cls, i: int, n: int) -> "WeylElementC":
        if not 1 <= i <= n:
            raise ValueError(f"simple reflection index {i} out of 1..{n}")
        perm, signs = list(range(n)), [1] * n
        if i < n:
            perm[i - 1], perm[i] = i, i - 1
        else:
            signs[n - 1] = -1
        return cls(tuple(perm), tuple(signs))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> "WeylElementC":
        w = cls.identity(n)
        for i in word:
            w = w * cls.simple(i, n)
        return w

    def __mul__(self, other: "WeylElementC") -> "WeylElementC":
        # (self other)(e_i) = self(other(e_i))
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.n))
        return WeylElementC(perm, signs)

    def act(self, vec: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.n
        for i, c in enumerate(vec):
            out[self.perm[i]] += self.signs[i] * c
        return tuple(out)

    def length(self) -> int:
        return sum(1 for r in positive_roots(self.n) if not _is_positive(self.act(r)))


def _is_positive(root: Sequence[int]) -> bool:
    return next(c for c in root if c) > 0


def positive_roots(n: int) -> list[tuple[int, ...]]:
    """e_i - e_j, e_i + e_j (i < j) and 2 e_i."""
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            for s in (-1, 1):
                r = [0] * n
                r[i], r[j] = 1, s
                roots.append(tuple(r))
        r = [0] * n
        r[i] = 2
        roots.append(tuple(r))
    return roots


def simple_root(i: int, n: int) -> tuple[int, ...]:
    r = [0] * n
    if i < n:
        r[i - 1], r[i] = 1, -1
    else:
        r[n - 1] = 2
    return tuple(r)


@dataclass(frozen=True)
class ReducedWord:
    indices: tuple[int, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if any(not 1 <= i <= self.n for i in self.indices):
            raise ValueError(f"letters must lie in 1..{self.n}")
        if self.element().length() != len(self.indices):
            raise ValueError(f"word {list(self.indices)} is not reduced")

    def element(self) -> WeylElementC:
        return WeylElementC.from_word(self.indices, self.n)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


def q_word(k: int, i: int) -> list[int]:
    """s_{k-1} s_{k-2} ... s_i."""
    return list(range(k - 1, i - 1, -1))


def r_word(n: int, i: int) -> list[int]:
    """s_i ... s_{n-1} s_n s_{n-1} ... s_i."""
    return list(range(i, n)) + [n] + list(range(n - 1, i - 1, -1))


def wM_word(n: int, k: int) -> ReducedWord:
    """Reduced word r_k q_1 r_k q_2 ... q_{k-1} r_k for the long element relative to GL_k."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    word = r_word(n, k)
    for i in range(1, k):
        word += q_word(k, i) + r_word(n, k)
    return ReducedWord(tuple(word), n)


@dataclass(frozen=True, eq=False)
class RootVector:
    matrix: np.ndarray
    label: str
    group: str
    n: int


def _weights(group: str, n: int) -> list[tuple[int, ...]]:
    def e(i, s):
        w = [0] * n
        w[i] = s
        return tuple(w)
    pos = [e(i, 1) for i in range(n)]
    neg = [e(i, -1) for i in range(n)]
    if group == SP:
        return pos + neg
    return pos + [(0,) * n] + neg


def _gram(group: str, n: int) -> np.ndarray:
    return omega(n) if group == SP else orth_space(n, 1).gram


def _positive_simple(group: str, n: int, i: int) -> np.ndarray:
    if group == SP:
        X = exact.zeros(2 * n)
        if i < n:
            X[i - 1, i] = Fraction(1)            # y_{i+1} -> y_i
            X[n + i, n + i - 1] = Fraction(-1)   # y*_i -> -y*_{i+1}
        else:
            X[n - 1, 2 * n - 1] = Fraction(1)    # y*_n -> y_n
        return X
    X = exact.zeros(2 * n + 1)
    if i < n:
        X[i - 1, i] = Fraction(1)                # x_{i+1} -> x_i
        X[n + 1 + i, n + i] = Fraction(-1)       # x*_i -> -x*_{i+1}
    else:
        X[n - 1, n] = Fraction(2)                # x_0 -> 2 x_n
        X[n, 2 * n] = Fraction(-1)               # x*_n -> -x_0
    return X


def _negative_simple(group: str, n: int, i: int, X: np.ndarray) -> np.ndarray:
    """The -alpha_i root vector Y with [X, Y] the coroot, solved from the Lie condition."""
    wts = _weights(group, n)
    alpha = simple_root(i, n) if group == SP else _so_simple_root(i, n)
    size = len(wts)
    slots = [(r, c) for r in range(size) for c in range(size)
             if tuple(a - b for a, b in zip(wts[r], wts[c])) == tuple(-x for x in alpha)]
    G = _gram(group, n)
    # linear conditions Y^T G + G Y = 0; for Y = E_rc the (a, b) entry of Y^T G + G Y is [a == c] G[r, b] + G[a, r] [b == c]
    rows = exact.zeros(size * size, len(slots))
    for s, (r, c) in enumerate(slots):
        for b in range(size):
            rows[c * size + b, s] += G[r, b]
        for a in range(size):
            rows[a * size + c, s] += G[a, r]
    kern = exact.nullspace(rows)
    if len(kern) != 1:
        raise ArithmeticError("opposite root space is not one-dimensional")
    Y = exact.zeros(size)
    for (r, c), coef in zip(slots, kern[0][:, 0]):
        Y[r, c] = coef
    H = X @ Y - Y @ X
    # alpha(H) for diagonal H, weights read off the diagonal
    value = sum(alpha[j] * H[j, j] for j in range(n))
    return Y * (Fraction(2) / value)


def _so_simple_root(i: int, n: int) -> tuple[int, ...]:
    r = [0] * n
    if i < n:
        r[i - 1], r[i] = 1, -1
    else:
        r[n - 1] = 1
    return tuple(r)


def root_vector(group: str, n: int, i: int, sign: int = 1) -> RootVector:
    """X_{±alpha_i} (group ``"sp"``) or X_{±beta_i} (group ``"so"``)."""
    group = _check_group(group)
    if not 1 <= i <= n:
        raise ValueError(f"root index {i} out of 1..{n}")
    if sign not in (1, -1):
        raise ValueError("sign must be ±1")
    X = _positive_simple(group, n, i)
    name = "alpha" if group == SP else "beta"
    if sign == 1:
        return RootVector(X, f"{name}_{i}", group, n)
    return RootVector(_negative_simple(group, n, i, X), f"-{name}_{i}", group, n)


def exp_nilpotent(X) -> np.ndarray:
    """exp(X) as the finite sum of X^k / k!."""
    M = X.matrix if isinstance(X, RootVector) else X
    size = M.shape[0]
    out = exact.identity(size)
    power = exact.identity(size)
    for k in range(1, size + 1):
        power = power @ M
        if exact.is_zero(power):
            return out
        out = out + power / factorial(k)
    raise ValueError("matrix is not nilpotent")


@lru_cache(maxsize=None)
def _tits_cached(group: str, n: int, i: int) -> np.ndarray:
    X = exp_nilpotent(root_vector(group, n, i, 1))
    Y = exp_nilpotent(-root_vector(group, n, i, -1).matrix)
    return X @ Y @ X


def tits_element(group: str, n: int, i: int) -> np.ndarray:
    """exp(X) exp(-X_-) exp(X) for the i-th simple root."""
    group = _check_group(group)
    if not 1 <= i <= n:
        raise ValueError(f"root index {i} out of 1..{n}")
    return _tits_cached(group, n, i).copy()


def _letter_word(n: int, i: int) -> FactoredWord:
    """The symplectic Tits element as a one- or three-letter word."""
    w = tits_element(SP, n, i)
    if is_siegel(w):
        return FactoredWord(n, (Parabolic(w),))
    return FactoredWord.from_matrix(w)


def _as_indices(word, n: int) -> tuple[int, ...]:
    indices = word.indices if isinstance(word, ReducedWord) else tuple(word)
    if any(not 1 <= i <= n for i in indices):
        raise ValueError(f"letters must lie in 1..{n}")
    return indices


def ls_matrix(group: str, n: int, word) -> np.ndarray:
    """Product of the Tits elements along the word, with no cover."""
    group = _check_group(group)
    size = 2 * n if group == SP else 2 * n + 1
    out = exact.identity(size)
    for i in _as_indices(word, n):
        out = out @ tits_element(group, n, i)
    return out


def ls_representative(group: str, n: int, word, v: PlaceLike | None = None,
                      backend: str = "word"):
    """Langlands-Shelstad representative of a word.

    For ``"sp"`` each Tits element is lifted to Mp with sign +1 and the lifts
    are multiplied in Mp at the place v.  For ``"so"`` the plain matrix product
    is returned.
    """
    group = _check_group(group)
    indices = _as_indices(word, n)
    if group == SO:
        return ls_matrix(SO, n, indices)
    if v is None:
        raise ValueError("the symplectic representative needs a place")
    return lift_word([_letter_word(n, i) for i in indices], as_place(v), n=n, backend=backend)


def eps_ls(k: int, v: PlaceLike) -> int:
    """(-1,-1)_v^{k(k-1)/2}."""
    return hilbert(-1, -1, v) ** (k * (k - 1) // 2 % 2)


def target_matrix(group: str, n: int, k: int) -> np.ndarray:
    """(-1)^k times the block matrix [[0,0,∓J],[0,1,0],[J,0,0]] on (Y_k, middle, Y*_k)."""
    group = _check_group(group)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    J = J_matrix(k, n)
    sign = Fraction((-1) ** k)
    if group == SP:
        size, star = 2 * n, n
        middle = list(range(k, n)) + list(range(n + k, 2 * n))
        top = -J
    else:
        size, star = 2 * n + 1, n + 1
        middle = list(range(k, n + 1)) + list(range(n + 1 + k, 2 * n + 1))
        top = J
    g = exact.zeros(size)
    ys = list(range(k))
    ystar = list(range(star, star + k))
    g[np.ix_(ys, ystar)] = top
    g[np.ix_(ystar, ys)] = J
    for j in middle:
        g[j, j] = Fraction(1)
    return g * sign


def target_representative(group: str, n: int, k: int, v: PlaceLike | None = None):
    """The explicit representative: an MpElement with sign eps_ls for ``"sp"``, a matrix for ``"so"``."""
    group = _check_group(group)
    g = target_matrix(group, n, k)
    if group == SO:
        return g
    if v is None:
        raise ValueError("the symplectic representative needs a place")
    v = as_place(v)
    return MpElement(g, eps_ls(k, v), v)


# The factorisation used to evaluate the representative of the long relative
# Weyl element: products of symplectic Tits elements omega_i and their closed
# forms.

def _omega_product(n: int, indices: Iterable[int], inverse: bool = False) -> np.ndarray:
    out = exact.identity(2 * n)
    for i in indices:
        w = tits_element(SP, n, i)
        out = out @ (exact.inv(w) if inverse else w)
    return out


def chain_v(n: int, i: int) -> np.ndarray:
    """omega_i ... omega_{n-1} omega_n omega_{n-1} ... omega_i."""
    return _omega_product(n, r_word(n, i))


def chain_u(n: int, k: int, i: int) -> np.ndarray:
    """omega_{k-1} ... omega_i."""
    return _omega_product(n, q_word(k, i))


def chain_z(n: int, k: int, j: int) -> np.ndarray:
    """omega_{k-1}^-1 ... omega_j^-1."""
    return _omega_product(n, q_word(k, j), inverse=True)


def _a_range(lo: int, hi: int, n: int) -> np.ndarray:
    return a_S(range(lo, hi + 1), n)


def v_closed(n: int, i: int) -> np.ndarray:
    """a_{i+1..n} sigma_i^{2(n-i-1)+1}."""
    return _a_range(i + 1, n, n) @ exact.matpow(sigma((i,), n), 2 * (n - i - 1) + 1)


def z_closed(n: int, k: int, j: int) -> np.ndarray:
    """m_n(iota_{j-1, k-j+1, n-k}(kappa_{k-j+1}))."""
    return m_n(iota_gl(j - 1, k - j + 1, n - k, kappa_matrix(k - j + 1)))


def p_closed(n: int, i: int) -> np.ndarray:
    """a_i^{n-i+1} a_{i+1..n}, so that v_i = p_i sigma_i."""
    return exact.matpow(a_S((i,), n), n - i + 1) @ _a_range(i + 1, n, n)


def p_prime_closed(n: int, k: int, i: int) -> np.ndarray:
    """a_{i..k}^{n-i+1} a_{k+1..n}^{k-i+1}, so that v_i ... v_k = sigma_{i..k} p'_i."""
    return (exact.matpow(_a_range(i, k, n), n - i + 1)
            @ exact.matpow(_a_range(k + 1, n, n), k - i + 1))


def z_product_closed(n: int, k: int) -> np.ndarray:
    """m_n(iota_{0,k,n-k}((-1)^{n+k} J))."""
    return m_n(iota_gl(0, k, n - k, J_matrix(k, n) * (-1) ** (n + k)))


def v_product_closed(n: int, k: int, v: PlaceLike) -> MpElement:
    """(sigma_{1..k}^{2n+1} a_{k+1..n}^k, (-1,-1)^{k(k-1)/2})."""
    v = as_place(v)
    g = exact.matpow(sigma(range(1, k + 1), n), 2 * n + 1) @ exact.matpow(_a_range(k + 1, n, n), k)
    return MpElement(g, eps_ls(k, v), v)


def lift_omegas(n: int, indices: Iterable[int], v: PlaceLike, inverse: bool = False,
                backend: str = "word") -> MpElement:
    """Mp product of the lifts (omega_i, 1), or of their inverses, along ``indices``."""
    v = as_place(v)
    pieces = []
    for i in indices:
        w = _letter_word(n, i)
        pieces.append(w.inverse() if inverse else w)
    return lift_word(pieces, v, n=n, backend=backend)


def chain_representative(n: int, k: int, v: PlaceLike, backend: str = "word") -> MpElement:
    """The lifted long element evaluated through the regrouping z_1..z_{k-1} v_1..v_k.

    Each v_i and z_j is lifted through its omega letters; the v-product is
    accumulated from the right, c(v_i, v_{i+1} ... v_k) at each step.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    v = as_place(v)
    acc = lift_omegas(n, r_word(n, k), v, backend=backend)
    for i in range(k - 1, 0, -1):
        acc = mp_multiply(lift_omegas(n, r_word(n, i), v, backend=backend), acc, backend)
    zs = mp_identity(n, v)
    for j in range(1, k):
        zs = mp_multiply(zs, lift_omegas(n, q_word(k, j), v, inverse=True, backend=backend),
                         backend)
    return mp_multiply(zs, acc, backend)
