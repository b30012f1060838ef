"""Named verification suites and their reports.

Every suite is a deterministic function of its parameters: random elements
come from a ``random.Random`` seeded by (seed, suite name) and are built as
short words in the group generators, so membership is exact by construction.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

import numpy as np

from . import exact
from .mpcover import (
    FactoredWord,
    Irreducible,
    MlElement,
    MpElement,
    Parabolic,
    Sigma,
    cocycle_leray,
    cocycle_word,
    lift_word,
    ml_multiply,
    mp_identity,
    mp_invert,
    mp_multiply,
    sigma_cocycle,
)
from .qforms import invariants, weil_index_form, witt_equivalent
from .scalars import (
    REAL,
    AdditiveCharacter,
    Mu8,
    Place,
    as_place,
    canonical_classes,
    hilbert,
    normalized_weil_index,
    square_class,
    weil_index,
    weil_index_oracle,
)
from .soodd import discriminant, is_special_orthogonal, orth_space, so_generator
from .spgroup import (
    a_S,
    bruhat_decompose,
    cell_rank,
    generator,
    iota_gl,
    J_matrix,
    m_n,
    n_b,
    n_c,
    sigma,
    siegel_det,
    w_Y,
    x_function,
)
from .weylreps import (
    SO,
    SP,
    chain_representative,
    chain_u,
    chain_v,
    chain_z,
    eps_ls,
    lift_omegas,
    ls_representative,
    p_closed,
    p_prime_closed,
    q_word,
    r_word,
    target_representative,
    v_closed,
    v_product_closed,
    wM_word,
    z_closed,
    z_product_closed,
)

__all__ = [
    "SUITES",
    "SuiteParams",
    "Case",
    "VerificationReport",
    "UnknownSuite",
    "run_suite",
    "render_report",
    "report_from_json",
    "to_json_value",
    "RandomElements",
]


class UnknownSuite(ValueError):
    pass


@dataclass(frozen=True)
class SuiteParams:
    n_max: int = 4
    primes: tuple[int, ...] = (2, 3, 5)
    trials: int = 500
    seed: int = 0
    k_range: tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(int(p) for p in self.primes))
        if self.n_max < 1:
            raise ValueError("n_max must be at least 1")
        if not self.primes:
            raise ValueError("primes must be nonempty")
        for p in self.primes:
            Place(p)
        if self.trials < 0:
            raise ValueError("trials must be nonnegative")

    def ks(self, n: int) -> range:
        lo, hi = self.k_range if self.k_range else (1, n)
        return range(max(1, lo), min(n, hi) + 1)


@dataclass
class Case:
    suite: str
    name: str
    params: dict
    expected: Any
    computed: Any
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"suite": self.suite, "name": self.name, "params": self.params,
             "expected": self.expected, "computed": self.computed, "pass": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Case":
        return cls(d["suite"], d["name"], d["params"], d["expected"], d["computed"],
                   d["pass"], d.get("detail", ""))


@dataclass
class VerificationReport:
    suite: str
    params: dict
    cases: list[Case] = field(default_factory=list)
    elapsed: float | None = None

    @property
    def passed_count(self) -> int:
        return sum(c.passed for c in self.cases)

    @property
    def failed_count(self) -> int:
        return len(self.cases) - self.passed_count

    @property
    def passed(self) -> bool:
        return self.failed_count == 0

    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def __eq__(self, other) -> bool:
        return (isinstance(other, VerificationReport) and self.suite == other.suite
                and self.params == other.params
                and [c.to_dict() for c in self.cases] == [c.to_dict() for c in other.cases])


def to_json_value(x) -> Any:
    """Rationals as "num/den", matrices row-major, Mu8 as its exponent."""
    if isinstance(x, MpElement):
        return {"g": exact.to_strings(x.g), "eps": x.eps}
    if isinstance(x, MlElement):
        return {"a": exact.to_strings(x.a), "eps": x.eps}
    if isinstance(x, np.ndarray):
        return exact.to_strings(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, Mu8):
        return x.exponent
    if isinstance(x, Place):
        return str(x)
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, dict):
        return {str(k): to_json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_json_value(v) for v in x]
    return str(x)


class _Collector:
    def __init__(self, suite: str):
        self.suite = suite
        self.cases: list[Case] = []

    def add(self, name: str, params: dict, expected, computed, passed: bool | None = None,
            detail: str = ""):
        if passed is None:
            passed = _same(expected, computed)
        self.cases.append(Case(self.suite, name, to_json_value(params), to_json_value(expected),
                               to_json_value(computed), bool(passed), detail))

    def check(self, name: str, params: dict, expected: Callable[[], Any],
              computed: Callable[[], Any], same: Callable[[Any, Any], bool] | None = None):
        """Evaluate both sides, turning Irreducible and other errors into failing cases."""
        try:
            e = expected()
            c = computed()
        except Irreducible as err:
            self.add(name, params, None, None, False, f"irreducible: {err}")
            return
        except (ArithmeticError, ValueError) as err:
            self.add(name, params, None, None, False, f"{type(err).__name__}: {err}")
            return
        ok = same(e, c) if same else _same(e, c)
        self.add(name, params, e, c, ok)


def _same(a, b) -> bool:
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return (isinstance(a, np.ndarray) and isinstance(b, np.ndarray) and exact.equal(a, b))
    return a == b


class RandomElements:
    """Seeded random group elements built as words in the generators, entries in -3..3."""

    def __init__(self, rng: random.Random):
        self.rng = rng

    def entry(self) -> Fraction:
        return Fraction(self.rng.randint(-3, 3))

    def gl(self, k: int) -> np.ndarray:
        while True:
            a = exact.mat([[self.entry() for _ in range(k)] for _ in range(k)])
            if exact.det(a) != 0:
                return a

    def sym(self, k: int) -> np.ndarray:
        c = exact.zeros(k)
        for i in range(k):
            for j in range(i, k):
                c[i, j] = c[j, i] = self.entry()
        return c

    def subset(self, n: int) -> tuple[int, ...]:
        return tuple(i for i in range(1, n + 1) if self.rng.random() < 0.5)

    def nonempty_subset(self, n: int) -> tuple[int, ...]:
        while True:
            S = self.subset(n)
            if S:
                return S

    def parabolic(self, n: int) -> np.ndarray:
        return m_n(self.gl(n)) @ n_c(self.sym(n))

    def unipotent(self, n: int, k: int) -> np.ndarray:
        """A random element of the unipotent radical of the parabolic stabilising Y_k."""
        b = exact.mat([[self.entry() for _ in range(2 * (n - k))] for _ in range(k)]) \
            if k < n else None
        u = n_c(self.sym(k), n)
        return n_b(b, n) @ u if b is not None else u

    def generator(self, n: int) -> np.ndarray:
        kind = self.rng.choice(["m_n", "n_c", "n_b", "sigma", "w_Y"])
        if kind == "m_n":
            return generator(n, "m_n", self.gl(n))
        if kind == "n_c":
            return generator(n, "n_c", self.sym(n))
        if kind == "n_b":
            k = self.rng.randint(1, n)
            if k == n:
                return generator(n, "n_c", self.sym(n))
            b = exact.mat([[self.entry() for _ in range(2 * (n - k))] for _ in range(k)])
            return generator(n, "n_b", b)
        if kind == "sigma":
            return generator(n, "sigma", self.subset(n))
        return generator(n, "w_Y", self.rng.randint(1, n))

    def sp(self, n: int, length: int | None = None) -> np.ndarray:
        length = self.rng.randint(1, 8) if length is None else length
        g = exact.identity(2 * n)
        for _ in range(length):
            g = g @ self.generator(n)
        return g

    def word(self, n: int, length: int = 3) -> FactoredWord:
        letters = []
        for _ in range(length):
            if self.rng.random() < 0.5:
                letters.append(Parabolic(self.parabolic(n)))
            else:
                letters.append(Sigma(self.subset(n)))
        return FactoredWord(n, letters)

    def rational(self, bound: int) -> Fraction:
        while True:
            num = self.rng.randint(-bound, bound)
            if num:
                return Fraction(num, self.rng.randint(1, bound))


def _places(params: SuiteParams, real: bool = False) -> list[Place]:
    out = [as_place(p) for p in params.primes]
    return out + [REAL] if real else out


def _subsets(n: int) -> list[tuple[int, ...]]:
    return [S for r in range(n + 1) for S in itertools.combinations(range(1, n + 1), r)]


# Suites -----------------------------------------------------------------

def _suite_prop_ls_sp(params: SuiteParams, rng: random.Random, out: _Collector):
    for n in range(1, params.n_max + 1):
        for k in params.ks(n):
            word = wM_word(n, k)
            out.add("wM-word-reduced", {"n": n, "k": k}, len(word), word.element().length())
            for v in _places(params):
                p = {"n": n, "k": k, "place": v}
                out.check("letter-product", p, lambda: target_representative(SP, n, k, v),
                          lambda: ls_representative(SP, n, word, v))
                out.check("regrouped-product", p, lambda: target_representative(SP, n, k, v),
                          lambda: chain_representative(n, k, v))


def _suite_prop_ls_so(params: SuiteParams, rng: random.Random, out: _Collector):
    for n in range(1, params.n_max + 1):
        space = orth_space(n)
        for k in params.ks(n):
            p = {"n": n, "k": k}
            out.check("letter-product", p,
                      lambda: target_representative(SO, n, k),
                      lambda: ls_representative(SO, n, wM_word(n, k)))
            # the target is w_X(k) l(a) with a = (-1)^{k+1} J, so it lies in SO(V^+)
            a = J_matrix(k, n) * (-1) ** (k + 1)
            out.check("target-in-w_X-levi-coset", p,
                      lambda: target_representative(SO, n, k),
                      lambda: so_generator(space, "w_X", k) @ so_generator(space, "l", a))
            out.check("target-special-orthogonal", p, lambda: True,
                      lambda: is_special_orthogonal(space, target_representative(SO, n, k)))


def _suite_cocycle_table(params: SuiteParams, rng: random.Random, out: _Collector):
    for n in range(1, min(params.n_max, 3) + 1):
        subsets = _subsets(n)
        for v in _places(params):
            minus = hilbert(-1, -1, v)
            for S, T in itertools.product(subsets, subsets):
                j = len(set(S) & set(T))
                expected = minus ** (j * (j + 1) // 2 % 2)
                p = {"n": n, "S": list(S), "T": list(T), "place": v}
                out.check("sigma-pair-word", p, lambda: expected,
                          lambda: cocycle_word(FactoredWord(n, (Sigma(S),)),
                                               FactoredWord(n, (Sigma(T),)), v))
                out.check("sigma-pair-leray", p, lambda: expected,
                          lambda: cocycle_leray(sigma(S, n), sigma(T, n), v))


def _suite_proof_chain(params: SuiteParams, rng: random.Random, out: _Collector):
    for n in range(1, params.n_max + 1):
        for i in range(1, n + 1):
            out.check("v-closed-form", {"n": n, "i": i}, lambda: v_closed(n, i),
                      lambda: chain_v(n, i))
            out.check("v-equals-p-sigma", {"n": n, "i": i}, lambda: chain_v(n, i),
                      lambda: p_closed(n, i) @ sigma((i,), n))
        for k in params.ks(n):
            for j in range(1, k):
                out.check("z-closed-form", {"n": n, "k": k, "j": j},
                          lambda: z_closed(n, k, j), lambda: chain_z(n, k, j))
                out.check("vk-u-equals-z-v", {"n": n, "k": k, "i": j},
                          lambda: chain_z(n, k, j) @ chain_v(n, j),
                          lambda: chain_v(n, k) @ chain_u(n, k, j))
                for i in range(1, j):
                    out.check("v-z-commute", {"n": n, "k": k, "i": i, "j": j},
                              lambda: chain_z(n, k, j) @ chain_v(n, i),
                              lambda: chain_v(n, i) @ chain_z(n, k, j))
            z_prod = exact.identity(2 * n)
            for j in range(1, k):
                z_prod = z_prod @ chain_z(n, k, j)
            out.check("z-product", {"n": n, "k": k}, lambda: z_product_closed(n, k),
                      lambda: z_prod)
            for i in range(1, k + 1):
                tail = exact.identity(2 * n)
                for l in range(i, k + 1):
                    tail = tail @ chain_v(n, l)
                out.check("v-tail-sigma-p", {"n": n, "k": k, "i": i},
                          lambda: sigma(range(i, k + 1), n) @ p_prime_closed(n, k, i),
                          lambda: tail)
            for v in _places(params):
                for i in range(1, k):
                    p = {"n": n, "k": k, "i": i, "place": v}
                    w1 = FactoredWord(n, (Parabolic(p_closed(n, i)), Sigma((i,))))
                    w2 = FactoredWord(n, (Sigma(tuple(range(i + 1, k + 1))),
                                          Parabolic(p_prime_closed(n, k, i + 1))))
                    out.check("c-v-tail", p,
                              lambda: hilbert(-1, -1, v) ** ((k + i) % 2),
                              lambda: cocycle_word(w1, w2, v))
                for i in range(1, k + 1):
                    out.check("v-lift-sign", {"n": n, "k": k, "i": i, "place": v},
                              lambda: MpElement(chain_v(n, i), 1, v),
                              lambda: lift_omegas(n, r_word(n, i), v))
                for j in range(1, k):
                    out.check("z-lift-sign", {"n": n, "k": k, "j": j, "place": v},
                              lambda: MpElement(chain_z(n, k, j), 1, v),
                              lambda: lift_omegas(n, q_word(k, j), v, inverse=True))

                def v_product():
                    acc = MpElement(chain_v(n, k), 1, v,
                                    FactoredWord(n, (Sigma((k,)), Parabolic(p_prime_closed(n, k, k)))))
                    for i in range(k - 1, 0, -1):
                        vi = MpElement(chain_v(n, i), 1, v,
                                       FactoredWord(n, (Parabolic(p_closed(n, i)), Sigma((i,)))))
                        acc = mp_multiply(vi, acc)
                    return MpElement(acc.g, acc.eps, v)

                out.check("v-product-lift", {"n": n, "k": k, "place": v},
                          lambda: v_product_closed(n, k, v), v_product)
                out.check("z-product-lift", {"n": n, "k": k, "place": v},
                          lambda: MpElement(z_product_closed(n, k), 1, v),
                          lambda: _strip(lift_word([FactoredWord(n, (Parabolic(chain_z(n, k, j)),))
                                                    for j in range(1, k)], v, n=n)))
                out.check("eps-ls", {"k": k, "place": v},
                          lambda: hilbert(-1, -1, v) ** (k * (k - 1) // 2 % 2),
                          lambda: eps_ls(k, v))


def _strip(x: MpElement) -> MpElement:
    return MpElement(x.g, x.eps, x.place)


def _suite_hilbert_laws(params: SuiteParams, rng: random.Random, out: _Collector):
    gen = RandomElements(rng)
    for v in _places(params, real=True):
        classes = canonical_classes(v)
        sym_ok = all(hilbert(a, b, v) == hilbert(b, a, v) for a in classes for b in classes)
        out.add("symmetry", {"place": v}, True, sym_ok)
        bim_ok = all(hilbert(a * a2, b, v) == hilbert(a, b, v) * hilbert(a2, b, v)
                     for a in classes for a2 in classes for b in classes)
        out.add("bimultiplicativity", {"place": v}, True, bim_ok)
        canon_ok = all(square_class(a, v).rep == a for a in classes)
        out.add("canonical-classes-fixed", {"place": v}, True, canon_ok)
        bad = []
        for _ in range(params.trials):
            a = gen.rational(10 ** 6)
            if hilbert(a, -a, v) != 1 or (a != 1 and hilbert(a, 1 - a, v) != 1):
                bad.append(a)
        out.add("steinberg-relations", {"place": v, "trials": params.trials}, [], bad)
    bad = []
    for _ in range(params.trials):
        a, b = gen.rational(10 ** 6), gen.rational(10 ** 6)
        primes = _prime_factors(2 * a.numerator * a.denominator * b.numerator * b.denominator)
        prod = hilbert(a, b, REAL)
        for p in primes:
            prod *= hilbert(a, b, p)
        if prod != 1:
            bad.append([a, b])
    out.add("product-formula", {"trials": params.trials}, [], bad)


def _prime_factors(m: int) -> list[int]:
    m = abs(m)
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def _suite_weil_oracle(params: SuiteParams, rng: random.Random, out: _Collector):
    for p in params.primes:
        for c in (Fraction(1), Fraction(3), Fraction(1, p)):
            psi = AdditiveCharacter(p, c)
            for a in canonical_classes(p):
                out.check("closed-vs-oracle", {"place": p, "shift": c, "a": a},
                          lambda: weil_index_oracle(a, psi), lambda: weil_index(a, psi))
        psi = AdditiveCharacter(p)
        classes = canonical_classes(p)
        for a, b in itertools.product(classes, classes):
            out.check("normalized-index-hilbert", {"place": p, "a": a, "b": b},
                      lambda: Mu8.from_sign(hilbert(a, b, p)),
                      lambda: normalized_weil_index(a, psi) * normalized_weil_index(b, psi)
                      / normalized_weil_index(a * b, psi))
        for n in range(0, min(params.n_max, 3) + 1):
            for eps in (1, -1):
                if eps == -1 and n == 0:
                    continue
                space = orth_space(n, eps, p)
                prm = {"place": p, "n": n, "epsilon": eps}
                out.check("weil-index-of-V", prm,
                          lambda: weil_index(1, psi) * Mu8.from_sign(eps),
                          lambda: weil_index_form(space.form(), psi))
                out.check("disc-of-V", prm, lambda: Fraction(1),
                          lambda: discriminant(space, p).rep)
                # V^+ is H^n ⊥ <1>; V^- has the anisotropic ternary of V^-_1 as kernel
                kernel = orth_space(0) if eps == 1 else orth_space(1, -1, p)
                out.check("witt-class-of-V", prm, lambda: True,
                          lambda: witt_equivalent(space.form(), kernel.form(), p))
                out.check("rank-of-V", prm, lambda: 2 * n + 1,
                          lambda: invariants(space.form(), p).rank)


def _suite_bruhat(params: SuiteParams, rng: random.Random, out: _Collector):
    gen = RandomElements(rng)
    bad_recon, bad_rank, bad_x = [], [], []
    for t in range(params.trials):
        n = gen.rng.randint(1, params.n_max)
        g = gen.sp(n)
        p1, S, p2 = bruhat_decompose(g)
        if not exact.equal(p1 @ sigma(S, n) @ p2, g):
            bad_recon.append(g)
        if len(S) != cell_rank(g):
            bad_rank.append(g)
        if t < min(params.trials, 200):
            q1, q2 = gen.parabolic(n), gen.parabolic(n)
            for v in _places(params):
                lhs = x_function(q1 @ g @ q2, v)
                rhs = square_class(siegel_det(q1) * siegel_det(q2) * siegel_det(p1)
                                   * siegel_det(p2), v)
                if lhs != rhs:
                    bad_x.append(g)
    out.add("reconstruction", {"trials": params.trials}, 0, len(bad_recon))
    out.add("cell-rank", {"trials": params.trials}, 0, len(bad_rank))
    out.add("x-invariance", {"trials": min(params.trials, 200)}, 0, len(bad_x))
    for n in range(1, params.n_max + 1):
        out.check("x-of-w_Y", {"n": n}, lambda: square_class((-1) ** n, params.primes[0]),
                  lambda: x_function(w_Y(n, n), params.primes[0]))


def _suite_levi_cover(params: SuiteParams, rng: random.Random, out: _Collector):
    gen = RandomElements(rng)
    places = _places(params, real=True)
    bad_levi, bad_ml, bad_unip = [], [], []
    for _ in range(params.trials):
        n = gen.rng.randint(1, params.n_max)
        k = gen.rng.randint(1, n)
        r = gen.rng.randint(0, n - k)
        a, a2 = gen.gl(k), gen.gl(k)
        g1, g2 = m_n(iota_gl(r, k, n - k - r, a)), m_n(iota_gl(r, k, n - k - r, a2))
        v = gen.rng.choice(places)
        expected = hilbert(exact.det(a), exact.det(a2), v)
        if cocycle_word(g1, g2, v) != expected:
            bad_levi.append([a, a2, v])
        prod = mp_multiply(MpElement(g1, 1, v), MpElement(g2, 1, v))
        ml = ml_multiply(MlElement(a, 1, v), MlElement(a2, 1, v))
        if prod.eps != ml.eps or not exact.equal(prod.g, m_n(iota_gl(r, k, n - k - r, ml.a))):
            bad_ml.append([a, a2, v])
        u1, u2 = gen.unipotent(n, k), gen.unipotent(n, k)
        x = mp_multiply(MpElement(u1, 1, v), MpElement(u2, 1, v))
        if x != MpElement(u1 @ u2, 1, v):
            bad_unip.append([u1, u2, v])
    out.add("levi-restriction", {"trials": params.trials}, [], bad_levi)
    out.add("levi-matches-ml-cover", {"trials": params.trials}, [], bad_ml)
    out.add("unipotent-splitting", {"trials": params.trials}, [], bad_unip)


def _suite_mp_associativity(params: SuiteParams, rng: random.Random, out: _Collector):
    gen = RandomElements(rng)
    places = _places(params, real=True)
    n_cap = min(params.n_max, 3)
    # cocycle identity on reducible word triples
    found = attempts = 0
    bad = []
    while found < params.trials and attempts < 20 * params.trials + 20:
        attempts += 1
        n = gen.rng.randint(1, n_cap)
        v = gen.rng.choice(places)
        w1, w2, w3 = gen.word(n), gen.word(n), gen.word(n)
        try:
            lhs = cocycle_word(w1, w2, v) * cocycle_word(w1 @ w2, w3, v)
            rhs = cocycle_word(w1, w2 @ w3, v) * cocycle_word(w2, w3, v)
        except Irreducible:
            continue
        found += 1
        if lhs != rhs:
            bad.append([w1.product, w2.product, w3.product, v])
    out.add("cocycle-identity-word", {"trials": params.trials}, [params.trials, []], [found, bad])
    # cross-backend agreement on reducible pairs
    found = attempts = 0
    bad = []
    while found < params.trials and attempts < 20 * params.trials + 20:
        attempts += 1
        n = gen.rng.randint(1, n_cap)
        v = gen.rng.choice(places)
        w1, w2 = gen.word(n), gen.word(n)
        try:
            c = cocycle_word(w1, w2, v)
        except Irreducible:
            continue
        found += 1
        if cocycle_leray(w1.product, w2.product, v) != c:
            bad.append([w1.product, w2.product, v])
    out.add("cross-backend", {"trials": params.trials}, [params.trials, []], [found, bad])
    # the Leray backend on arbitrary triples
    bad = []
    leray_trials = max(1, params.trials // 5) if params.trials else 0
    for _ in range(leray_trials):
        n = gen.rng.randint(1, n_cap)
        v = gen.rng.choice(places)
        g1, g2, g3 = gen.sp(n, 4), gen.sp(n, 4), gen.sp(n, 4)
        c = lambda a, b: cocycle_leray(a, b, v)
        if c(g1, g2) * c(g1 @ g2, g3) != c(g1, g2 @ g3) * c(g2, g3):
            bad.append([g1, g2, g3, v])
    out.add("cocycle-identity-leray", {"trials": leray_trials}, [], bad)
    # normalisation, centre, inverses, commuting pairs
    bad_norm, bad_inv, bad_comm = [], [], []
    for _ in range(min(params.trials, 100)):
        n = gen.rng.randint(1, n_cap)
        v = gen.rng.choice(places)
        g = gen.sp(n)
        one = exact.identity(2 * n)
        if cocycle_leray(one, g, v) != 1 or cocycle_leray(g, one, v) != 1 \
                or cocycle_word(one, g, v) != 1:
            bad_norm.append([g, v])
        x = MpElement(g, gen.rng.choice([1, -1]), v)
        if mp_multiply(x, mp_invert(x, "leray"), "leray") != mp_identity(n, v):
            bad_inv.append([g, v])
        w = gen.word(n)
        y = MpElement(w.product, gen.rng.choice([1, -1]), v, w)
        try:
            if mp_multiply(y, mp_invert(y)) != mp_identity(n, v):
                bad_inv.append([w.product, v])
        except Irreducible:
            pass
        S, T = gen.subset(n), gen.subset(n)
        t = m_n(exact.block_diag(*[exact.mat([[gen.rng.choice([-3, -2, -1, 1, 2, 3])]])
                                   for _ in range(n)]))
        for h1, h2 in ((a_S(S, n), sigma(T, n)), (t, a_S(T, n)), (sigma(S, n), sigma(S, n))):
            if cocycle_leray(h1, h2, v) != cocycle_leray(h2, h1, v):
                bad_comm.append([h1, h2, v])
    out.add("normalisation", {}, [], bad_norm)
    out.add("inverse", {}, [], bad_inv)
    out.add("commuting-symmetry", {}, [], bad_comm)
    for v in places:
        for n in range(1, n_cap + 1):
            z = MpElement(exact.identity(2 * n), -1, v)
            out.check("centre-order-two", {"n": n, "place": v},
                      lambda: mp_identity(n, v), lambda: _strip(mp_multiply(z, z)))
            g = gen.sp(n)
            x = MpElement(g, 1, v)
            out.check("centre-commutes", {"n": n, "place": v},
                      lambda: _strip(mp_multiply(z, x)), lambda: _strip(mp_multiply(x, z)))


SUITES: dict[str, Callable[[SuiteParams, random.Random, _Collector], None]] = {
    "prop-ls-sp": _suite_prop_ls_sp,
    "prop-ls-so": _suite_prop_ls_so,
    "cocycle-table": _suite_cocycle_table,
    "proof-chain": _suite_proof_chain,
    "hilbert-laws": _suite_hilbert_laws,
    "weil-oracle": _suite_weil_oracle,
    "bruhat": _suite_bruhat,
    "levi-cover": _suite_levi_cover,
    "mp-associativity": _suite_mp_associativity,
}


def _params_dict(params: SuiteParams) -> dict:
    d = {"n_max": params.n_max, "primes": list(params.primes), "trials": params.trials,
         "seed": params.seed}
    if params.k_range:
        d["k_range"] = list(params.k_range)
    return d


def run_suite(name: str, params: SuiteParams | None = None) -> VerificationReport:
    params = params or SuiteParams()
    if name != "all" and name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    start = time.perf_counter()
    names = list(SUITES) if name == "all" else [name]
    cases: list[Case] = []
    for suite in names:
        rng = random.Random(f"{params.seed}:{suite}")
        out = _Collector(suite)
        try:
            SUITES[suite](params, rng, out)
        except Irreducible as err:
            out.add("suite-aborted", {}, None, None, False, f"irreducible: {err}")
        cases.extend(out.cases)
    return VerificationReport(name, _params_dict(params), cases, time.perf_counter() - start)


def render_report(report: VerificationReport, fmt: str = "text") -> bytes:
    """Text table or deterministic JSON (elapsed time appears in text only)."""
    if fmt == "json":
        doc = {
            "suite": report.suite,
            "params": report.params,
            "pass": report.passed,
            "summary": {"total": len(report.cases), "passed": report.passed_count,
                        "failed": report.failed_count},
            "cases": [c.to_dict() for c in report.cases],
        }
        return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [f"suite {report.suite}  params {json.dumps(report.params, sort_keys=True)}"]
    groups: dict[tuple[str, str], list[Case]] = {}
    for c in report.cases:
        groups.setdefault((c.suite, c.name), []).append(c)
    width = max([len(f"{s}/{n}") for s, n in groups] + [10])
    for (s, n), cs in groups.items():
        ok = sum(c.passed for c in cs)
        status = "PASS" if ok == len(cs) else "FAIL"
        lines.append(f"  {f'{s}/{n}':<{width}}  {ok:>5}/{len(cs):<5} {status}")
    for c in report.failures():
        lines.append("  failed: " + json.dumps(c.to_dict(), sort_keys=True))
    elapsed = f"  {report.elapsed:.2f}s" if report.elapsed is not None else ""
    lines.append(f"{'PASS' if report.passed else 'FAIL'}: {report.passed_count}/"
                 f"{len(report.cases)} cases{elapsed}")
    return ("\n".join(lines) + "\n").encode()


def report_from_json(data: bytes | str) -> VerificationReport:
    doc = json.loads(data)
    return VerificationReport(doc["suite"], doc["params"],
                              [Case.from_dict(c) for c in doc["cases"]])
