"""Square classes, Hilbert symbols and Weil indices at the places of Q.

A place is either a prime ``p`` (the field Q_p) or ``"real"``.  Elements of the
local field are always global rationals seen through a place, so every
computation here is exact except the Gauss-sum oracle, which snaps a complex
number to the nearest eighth root of unity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from .exact import frac

__all__ = [
    "Place",
    "PlaceLike",
    "as_place",
    "REAL",
    "SquareClass",
    "Mu8",
    "AdditiveCharacter",
    "DomainError",
    "OracleError",
    "valuation",
    "unit_part",
    "smallest_nonresidue",
    "canonical_classes",
    "square_class",
    "is_local_square",
    "hilbert",
    "weil_index_oracle",
    "weil_index",
    "normalized_weil_index",
]


class DomainError(ValueError):
    """An argument lies outside the domain of the operation (e.g. zero)."""


class OracleError(ArithmeticError):
    """The Gauss-sum oracle did not stabilise or did not snap cleanly."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True, order=True)
class Place:
    """``p`` is a prime, or ``None`` for the real place."""

    p: int | None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def is_real(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "real" if self.p is None else str(self.p)


REAL = Place(None)
PlaceLike = Union[Place, int, str]


def as_place(v: PlaceLike) -> Place:
    if isinstance(v, Place):
        return v
    if isinstance(v, str):
        if v.strip().lower() in ("real", "inf", "infinity", "r"):
            return REAL
        return Place(int(v))
    return Place(int(v))


def _nonzero(a) -> Fraction:
    a = frac(a)
    if a == 0:
        raise DomainError("zero has no square class")
    return a


def valuation(a, p: int) -> int:
    a = _nonzero(a)
    v = 0
    num, den = a.numerator, a.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def unit_part(a, p: int) -> Fraction:
    """``a / p**valuation(a, p)``."""
    a = _nonzero(a)
    return a / Fraction(p) ** valuation(a, p)


def _unit_mod(u: Fraction, m: int) -> int:
    return u.numerator * pow(u.denominator, -1, m) % m


@lru_cache(maxsize=None)
def smallest_nonresidue(p: int) -> int:
    for z in range(2, p):
        if pow(z, (p - 1) // 2, p) == p - 1:
            return z
    raise DomainError(f"no non-residue mod {p}")


def _legendre(u: Fraction, p: int) -> int:
    r = pow(_unit_mod(u, p), (p - 1) // 2, p)
    return 1 if r == 1 else -1


@dataclass(frozen=True)
class SquareClass:
    place: Place
    rep: Fraction

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        if self.place != other.place:
            raise DomainError("square classes at different places")
        return square_class(self.rep * other.rep, self.place)

    def __str__(self) -> str:
        return str(self.rep)


def canonical_classes(v: PlaceLike) -> list[Fraction]:
    """The canonical representatives of F^x / (F^x)^2 at ``v``."""
    v = as_place(v)
    if v.is_real:
        return [Fraction(1), Fraction(-1)]
    p = v.p
    if p == 2:
        return [Fraction(x) for x in (1, -1, 2, -2, 5, -5, 10, -10)]
    u = smallest_nonresidue(p)
    return [Fraction(x) for x in (1, u, p, u * p)]


_TWO_ADIC_UNIT = {1: 1, 3: -5, 5: 5, 7: -1}


def square_class(a, v: PlaceLike) -> SquareClass:
    a = _nonzero(a)
    v = as_place(v)
    if v.is_real:
        return SquareClass(v, Fraction(1 if a > 0 else -1))
    p = v.p
    e = valuation(a, p)
    u = unit_part(a, p)
    if p == 2:
        rep = _TWO_ADIC_UNIT[_unit_mod(u, 8)]
    else:
        rep = 1 if _legendre(u, p) == 1 else smallest_nonresidue(p)
    if e % 2:
        rep *= p
    return SquareClass(v, Fraction(rep))


def is_local_square(a, v: PlaceLike) -> bool:
    return square_class(a, v).rep == 1


def hilbert(a, b, v: PlaceLike) -> int:
    """Quadratic Hilbert symbol (a, b)_v in {+1, -1}."""
    a, b = _nonzero(a), _nonzero(b)
    v = as_place(v)
    if v.is_real:
        return -1 if (a < 0 and b < 0) else 1
    p = v.p
    alpha, beta = valuation(a, p), valuation(b, p)
    u, w = unit_part(a, p), unit_part(b, p)
    if p == 2:
        u8, w8 = _unit_mod(u, 8), _unit_mod(w, 8)
        eps = lambda t: ((t - 1) // 2) % 2
        omega = lambda t: ((t * t - 1) // 8) % 2
        e = eps(u8) * eps(w8) + alpha * omega(w8) + beta * omega(u8)
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= _legendre(u, p)
    if alpha % 2:
        s *= _legendre(w, p)
    return s


@dataclass(frozen=True)
class Mu8:
    """The eighth root of unity exp(2 pi i exponent / 8)."""

    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % 8)

    @classmethod
    def from_sign(cls, s: int) -> "Mu8":
        if s not in (1, -1):
            raise DomainError(f"{s} is not a sign")
        return cls(0 if s == 1 else 4)

    def __mul__(self, other: "Mu8") -> "Mu8":
        return Mu8(self.exponent + other.exponent)

    def __truediv__(self, other: "Mu8") -> "Mu8":
        return Mu8(self.exponent - other.exponent)

    def __pow__(self, k: int) -> "Mu8":
        return Mu8(self.exponent * k)

    def inverse(self) -> "Mu8":
        return Mu8(-self.exponent)

    def to_sign(self) -> int:
        if self.exponent == 0:
            return 1
        if self.exponent == 4:
            return -1
        raise DomainError(f"{self} is not real")

    def __complex__(self) -> complex:
        return cmath.exp(2j * math.pi * self.exponent / 8)

    def __str__(self) -> str:
        return f"zeta8^{self.exponent}"


ONE = Mu8(0)


@dataclass(frozen=True)
class AdditiveCharacter:
    """psi_c(x) = psi(c x), psi the level-zero character exp(2 pi i {x}_p) of Q_p."""

    p: int
    c: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "c", _nonzero(self.c))
        if not _is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def place(self) -> Place:
        return Place(self.p)

    def shifted(self, c) -> "AdditiveCharacter":
        return AdditiveCharacter(self.p, self.c * frac(c))

    def fractional_part(self, x) -> Fraction:
        """{c x}_p in Z[1/p] ∩ [0, 1)."""
        x = frac(x) * self.c
        if x == 0:
            return Fraction(0)
        p = self.p
        e = valuation(x, p)
        if e >= 0:
            return Fraction(0)
        m = p ** (-e)
        return Fraction(_unit_mod(unit_part(x, p), m), m)

    def __call__(self, x) -> complex:
        return cmath.exp(2j * math.pi * float(self.fractional_part(x)))


def _gauss_integral(b: Fraction, p: int, m: int) -> complex:
    """∫ over p^-m Z_p of psi(b x^2) dx, dx giving Z_p volume 1."""
    v = valuation(b, p)
    e2 = 1 if p == 2 else 0
    big_m = max(m - v - e2, -(v // 2), 0)
    count = p ** (m + big_m)
    k = 2 * m - v
    if k <= 0:
        return complex(p ** m)
    mod = p ** k
    unit = _unit_mod(unit_part(b, p), mod)
    y = np.arange(count, dtype=object)
    phase = np.array((unit * y * y) % mod, dtype=np.float64) / mod
    total = np.exp(2j * np.pi * phase).sum()
    return complex(total) / p ** big_m


def weil_index_oracle(a, psi: AdditiveCharacter, *, m_max: int = 14,
                      max_terms: int = 1 << 22, tol: float = 1e-6) -> Mu8:
    """Weil index gamma(psi_a) from a stabilised finite Gauss sum."""
    a = _nonzero(a)
    b = psi.c * a
    p = psi.p
    v = valuation(b, p)
    m = max(0, -(-v // 2))
    prev = None
    while m <= m_max:
        e2 = 1 if p == 2 else 0
        if p ** (m + max(m - v - e2, -(v // 2), 0)) > max_terms:
            break
        cur = _gauss_integral(b, p, m)
        if prev is not None and abs(cur) > tol and abs(cur - prev) < tol * max(1.0, abs(cur)):
            z = cur / abs(cur)
            exponent = round(cmath.phase(z) / (2 * math.pi) * 8) % 8
            if abs(z - complex(Mu8(exponent))) >= tol:
                raise OracleError(f"snap distance {abs(z - complex(Mu8(exponent))):.3g}")
            return Mu8(exponent)
        prev = cur
        m += 1
    raise OracleError(f"Gauss sum for a={a} at p={p} did not stabilise")


def _gamma_closed(b: Fraction, p: int) -> Mu8:
    e = valuation(b, p)
    u = unit_part(b, p)
    if p == 2:
        u8 = _unit_mod(u, 8)
        if e % 2 == 0:
            return Mu8(1 if u8 % 4 == 1 else 7)
        return Mu8(u8)
    if e % 2 == 0:
        return ONE
    exponent = 0 if p % 4 == 1 else 2
    if _legendre(u, p) == -1:
        exponent += 4
    return Mu8(exponent)


def weil_index(a, psi: AdditiveCharacter) -> Mu8:
    """Unnormalised Weil index gamma(psi_a) of x -> psi(a x^2)."""
    a = _nonzero(a)
    return _gamma_closed(psi.c * a, psi.p)


def normalized_weil_index(a, psi: AdditiveCharacter) -> Mu8:
    """gamma(a, psi) = gamma(psi_a) / gamma(psi); a fourth root of unity."""
    return weil_index(a, psi) / weil_index(1, psi)
