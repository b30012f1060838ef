"""The metaplectic double cover Mp(2n) = Sp(2n) x {±1} and the cover of GL_k.

Rao's normalised cocycle c(g, g') is evaluated by the word backend: Bruhat
factorisations of both arguments are rewritten with

    c(sigma_S, sigma_T)  = (-1,-1)^{j(j+1)/2},   j = |S ∩ T|
    c(pg, g'p')          = c(g, g')(x(g),x(p))(x(g'),x(p'))(x(p),x(p'))(x(gg'),x(pp'))
    c(g, p) = c(p, g)    = (x(p), x(g))

together with the 2-cocycle identity, until a (sigma_S, sigma_T) base case is
reached.  Pairs that do not reduce raise :class:`Irreducible`.  The Leray
backend (:func:`cocycle_leray`) evaluates the cocycle for arbitrary pairs from
the Maslov index of a Lagrangian triple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from . import exact
from .qforms import Lagrangian, diagonalize, kashiwara_form
from .scalars import AdditiveCharacter, Mu8, Place, PlaceLike, as_place, hilbert, weil_index
from .spgroup import (
    a_S,
    bruhat_decompose,
    cell_rank,
    is_siegel,
    is_symplectic,
    omega,
    siegel_det,
    sigma,
    x_value,
)

__all__ = [
    "Irreducible",
    "Parabolic",
    "Sigma",
    "Letter",
    "FactoredWord",
    "sigma_cocycle",
    "cocycle_word",
    "cocycle_leray",
    "cocycle",
    "MpElement",
    "mp_identity",
    "mp_multiply",
    "mp_invert",
    "lift_word",
    "MlElement",
    "ml_multiply",
]


class Irreducible(ArithmeticError):
    """The rewrite rules cannot bring this pair to a base case."""


@dataclass(frozen=True, eq=False)
class Parabolic:
    """A letter lying in the Siegel parabolic, with its det on Y cached."""

    mat: np.ndarray
    det_y: Fraction = field(init=False)

    def __post_init__(self):
        if not is_siegel(self.mat):
            raise ValueError("Parabolic letter is not in the Siegel parabolic")
        object.__setattr__(self, "det_y", siegel_det(self.mat))

    def matrix(self, n: int) -> np.ndarray:
        return self.mat


@dataclass(frozen=True)
class Sigma:
    S: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(sorted(set(self.S))))

    def matrix(self, n: int) -> np.ndarray:
        return sigma(self.S, n)


Letter = Union[Parabolic, Sigma]


@dataclass(frozen=True, eq=False)
class FactoredWord:
    """An element of Sp(2n) carried as a product of parabolic and sigma letters."""

    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if isinstance(letter, Parabolic) and letter.mat.shape != (2 * self.n, 2 * self.n):
                raise ValueError("letter has the wrong size")

    @classmethod
    def from_matrix(cls, g: np.ndarray) -> "FactoredWord":
        p1, S, p2 = bruhat_decompose(g)
        return cls(g.shape[0] // 2, (Parabolic(p1), Sigma(S), Parabolic(p2)))

    @property
    def product(self) -> np.ndarray:
        g = exact.identity(2 * self.n)
        for letter in self.letters:
            g = g @ letter.matrix(self.n)
        return g

    def __matmul__(self, other: "FactoredWord") -> "FactoredWord":
        if other.n != self.n:
            raise ValueError("words over different symplectic spaces")
        return FactoredWord(self.n, self.letters + other.letters)

    def inverse(self) -> "FactoredWord":
        out: list[Letter] = []
        for letter in reversed(self.letters):
            if isinstance(letter, Parabolic):
                out.append(Parabolic(exact.inv(letter.mat)))
            else:
                # sigma_S^-1 = a_S sigma_S
                out.extend([Parabolic(a_S(letter.S, self.n)), letter])
        return FactoredWord(self.n, out)

    def triples(self) -> list[tuple[np.ndarray, tuple[int, ...], np.ndarray]]:
        """Candidate (p1, S, p2) with product p1 sigma_S p2.

        The letters are read off directly when the word has at most one sigma
        letter; the canonical Bruhat form of the product is always included.
        """
        sigmas = [i for i, l in enumerate(self.letters) if isinstance(l, Sigma)]
        out = []
        if len(sigmas) <= 1:
            one = exact.identity(2 * self.n)
            cut = sigmas[0] if sigmas else len(self.letters)
            left, right = one, one
            for letter in self.letters[:cut]:
                left = left @ letter.mat
            for letter in self.letters[cut + 1:]:
                right = right @ letter.mat
            S = self.letters[cut].S if sigmas else ()
            out.append((left, S, right))
        canonical = tuple(bruhat_decompose(self.product))
        if not out or out[0][1] != canonical[1]:
            out.append(canonical)
        return out


WordLike = Union[FactoredWord, np.ndarray]


def _as_word(w: WordLike) -> FactoredWord:
    if isinstance(w, FactoredWord):
        return w
    return FactoredWord.from_matrix(w)


def sigma_cocycle(S: Iterable[int], T: Iterable[int], v: PlaceLike) -> int:
    """Base case c(sigma_S, sigma_T) = (-1,-1)_v^{j(j+1)/2}, j = |S ∩ T|."""
    j = len(set(S) & set(T))
    return hilbert(-1, -1, v) ** (j * (j + 1) // 2)


def _conj_into_siegel(s: np.ndarray, r: np.ndarray) -> np.ndarray | None:
    """s r s^-1 if it lies in the Siegel parabolic, else None."""
    out = s @ r @ exact.inv(s)
    return out if is_siegel(out) else None


def _splittings(r: np.ndarray, n: int):
    """Candidate factorisations r = r1 r2 inside the Siegel parabolic."""
    one = exact.identity(2 * n)
    yield one, r
    yield r, one
    A, B, D = r[:n, :n], r[:n, n:], r[n:, n:]
    levi = exact.block_diag(A, D)
    unip_right = one.copy()
    unip_right[:n, n:] = exact.inv(A) @ B
    yield levi, unip_right
    unip_left = one.copy()
    unip_left[:n, n:] = B @ exact.inv(D)
    yield unip_left, levi


def _sigma_r_sigma(S, r, T, n, v) -> int:
    """c(sigma_S r, sigma_T) for r in the Siegel parabolic."""
    sS, sT = sigma(S, n), sigma(T, n)
    sT_inv = exact.inv(sT)
    x_st = x_value(sS @ sT)
    for r1, r2 in _splittings(r, n):
        r1c = _conj_into_siegel(sS, r1)
        if r1c is None:
            continue
        r2c = _conj_into_siegel(sT_inv, r2)
        if r2c is None:
            continue
        # sigma_S r1 r2 sigma_T = r1c sigma_S sigma_T r2c
        sign = sigma_cocycle(S, T, v)
        sign *= hilbert(x_st, siegel_det(r2c), v)
        x1 = siegel_det(r1c)
        sign *= hilbert(siegel_det(r2), x1, v)
        sign *= hilbert(x_value(sS @ r2 @ sT), x1, v)
        return sign
    raise Irreducible(f"cannot move the parabolic between sigma_{S} and sigma_{T}")


def _reduce_pair(first, second, n: int, v: Place) -> int:
    p1, S, p2 = first
    q1, T, q2 = second
    x_p1, x_p2 = siegel_det(p1), siegel_det(p2)
    x_q1, x_q2 = siegel_det(q1), siegel_det(q2)
    r = p2 @ q1
    sign = _sigma_r_sigma(S, r, T, n, v)
    # c(sigma_S p2, q1 sigma_T) = c(sigma_S r, sigma_T) (x(p2), x(q1))
    sign *= hilbert(x_p2, x_q1, v)
    # strip p1 on the left and q2 on the right
    sign *= hilbert(x_p2, x_p1, v)
    sign *= hilbert(x_q1, x_q2, v)
    sign *= hilbert(x_p1, x_q2, v)
    sign *= hilbert(x_value(sigma(S, n) @ r @ sigma(T, n)), x_p1 * x_q2, v)
    return sign


def cocycle_word(w1: WordLike, w2: WordLike, v: PlaceLike) -> int:
    """Rao's cocycle c(g1, g2) by the rewrite rules; raises Irreducible."""
    v = as_place(v)
    w1, w2 = _as_word(w1), _as_word(w2)
    if w1.n != w2.n:
        raise ValueError("words over different symplectic spaces")
    n = w1.n
    g1, g2 = w1.product, w2.product
    if is_siegel(g1):
        return hilbert(siegel_det(g1), x_value(g2), v)
    if is_siegel(g2):
        return hilbert(siegel_det(g2), x_value(g1), v)
    for first in w1.triples():
        for second in w2.triples():
            try:
                return _reduce_pair(first, second, n, v)
            except Irreducible:
                continue
    raise Irreducible("no factorisation of the pair reaches a (sigma_S, sigma_T) base case")


def _gamma(a: Fraction, v: Place, psi: AdditiveCharacter | None) -> Mu8:
    """Unnormalised Weil index of x -> psi(a x^2); psi(x) = exp(2 pi i x) at the real place."""
    if v.is_real:
        return Mu8(1 if a > 0 else -1)
    return weil_index(a, psi)


def cocycle_leray(g1: np.ndarray, g2: np.ndarray, v: PlaceLike,
                  psi: AdditiveCharacter | None = None) -> int:
    """Rao's normalised cocycle for arbitrary g1, g2 via the Maslov index.

    The unnormalised value is the Weil index of the Kashiwara form of the
    Lagrangian triple (Y, g1 g2 Y, g1 Y); it is normalised by
    beta(g) = gamma(x(g), psi)^-1 gamma(psi)^-j(g), j the Bruhat cell rank.
    The result does not depend on psi (default: the level-zero character).
    """
    v = as_place(v)
    if psi is None and not v.is_real:
        psi = AdditiveCharacter(v.p)
    elif psi is not None and (v.is_real or psi.place != v):
        raise ValueError("psi lives at a different place")
    n = g1.shape[0] // 2
    Y = exact.zeros(2 * n, n)
    for i in range(n):
        Y[i, i] = Fraction(1)
    g12 = g1 @ g2
    form = kashiwara_form(Lagrangian(Y), Lagrangian(g12 @ Y), Lagrangian(g1 @ Y))
    maslov = Mu8(0)
    for a in diagonalize(form):
        maslov = maslov * _gamma(a / 2, v, psi)
    gamma_one = _gamma(Fraction(1), v, psi)

    def beta(g: np.ndarray) -> Mu8:
        x = x_value(g)
        return (_gamma(x, v, psi) / gamma_one) * gamma_one ** cell_rank(g)

    return (maslov * beta(g1) * beta(g2) / beta(g12)).to_sign()


def cocycle(w1: WordLike, w2: WordLike, v: PlaceLike, backend: str = "word") -> int:
    """Dispatch to a backend: ``"word"``, ``"leray"`` or ``"auto"`` (word, then leray)."""
    if backend == "leray":
        g1 = w1.product if isinstance(w1, FactoredWord) else w1
        g2 = w2.product if isinstance(w2, FactoredWord) else w2
        return cocycle_leray(g1, g2, v)
    if backend == "word":
        return cocycle_word(w1, w2, v)
    if backend == "auto":
        try:
            return cocycle_word(w1, w2, v)
        except Irreducible:
            return cocycle(w1, w2, v, "leray")
    raise ValueError(f"unknown cocycle backend {backend!r}")


@dataclass(frozen=True, eq=False)
class MpElement:
    """(g, eps) in Mp(2n) at a fixed place; ``word`` is optional factorisation metadata."""

    g: np.ndarray
    eps: int
    place: Place
    word: FactoredWord | None = None

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be ±1")
        object.__setattr__(self, "place", as_place(self.place))

    @property
    def n(self) -> int:
        return self.g.shape[0] // 2

    def as_word(self) -> FactoredWord:
        return self.word if self.word is not None else FactoredWord.from_matrix(self.g)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MpElement) and self.eps == other.eps
                and self.place == other.place and exact.equal(self.g, other.g))

    def __repr__(self) -> str:
        return f"MpElement(g={exact.to_strings(self.g)}, eps={self.eps}, place={self.place})"


def mp_identity(n: int, v: PlaceLike) -> MpElement:
    return MpElement(exact.identity(2 * n), 1, as_place(v), FactoredWord(n, ()))


def mp_multiply(x: MpElement, y: MpElement, backend: str = "word") -> MpElement:
    """(g, e)(g', e') = (g g', e e' c(g, g'))."""
    if x.place != y.place:
        raise ValueError("Mp elements at different places")
    wx, wy = x.as_word(), y.as_word()
    c = cocycle(wx, wy, x.place, backend)
    return MpElement(x.g @ y.g, x.eps * y.eps * c, x.place, wx @ wy)


def mp_invert(x: MpElement, backend: str = "word") -> MpElement:
    w = x.as_word()
    w_inv = w.inverse()
    c = cocycle(w, w_inv, x.place, backend)
    return MpElement(exact.inv(x.g), x.eps * c, x.place, w_inv)


Piece = Union[FactoredWord, Parabolic, Sigma, np.ndarray]


def lift_word(pieces: Sequence[Piece] | FactoredWord, v: PlaceLike, n: int | None = None,
              backend: str = "word") -> MpElement:
    """Product in Mp of the pieces, each lifted with sign +1.

    A :class:`FactoredWord` is lifted letter by letter; a sequence may mix
    words, single letters and plain symplectic matrices.
    """
    v = as_place(v)
    if isinstance(pieces, FactoredWord):
        n = pieces.n
        pieces = [FactoredWord(n, (l,)) for l in pieces.letters]
    words = []
    for piece in pieces:
        if isinstance(piece, (Parabolic, Sigma)):
            if n is None:
                raise ValueError("n is needed to lift bare letters")
            words.append(FactoredWord(n, (piece,)))
        elif isinstance(piece, FactoredWord):
            words.append(piece)
        else:
            if not is_symplectic(piece):
                raise ValueError("piece is not symplectic")
            words.append(FactoredWord.from_matrix(piece))
    if not words:
        if n is None:
            raise ValueError("empty word needs n")
        return mp_identity(n, v)
    out = MpElement(words[0].product, 1, v, words[0])
    for w in words[1:]:
        out = mp_multiply(out, MpElement(w.product, 1, v, w), backend)
    return out


@dataclass(frozen=True, eq=False)
class MlElement:
    """(a, eps) in the double cover of GL_k with law (aa', ee'(det a, det a')_v)."""

    a: np.ndarray
    eps: int
    place: Place

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be ±1")
        if exact.det(self.a) == 0:
            raise ValueError("a must be invertible")
        object.__setattr__(self, "place", as_place(self.place))

    def __eq__(self, other) -> bool:
        return (isinstance(other, MlElement) and self.eps == other.eps
                and self.place == other.place and exact.equal(self.a, other.a))


def ml_multiply(x: MlElement, y: MlElement) -> MlElement:
    if x.a.shape != y.a.shape:
        raise ValueError("ML elements of different sizes")
    if x.place != y.place:
        raise ValueError("ML elements at different places")
    c = hilbert(exact.det(x.a), exact.det(y.a), x.place)
    return MlElement(x.a @ y.a, x.eps * y.eps * c, x.place)
