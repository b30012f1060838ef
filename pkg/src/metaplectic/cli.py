"""Command line interface: ``python -m metaplectic <command> ...``.

Exit codes: 0 success / all cases pass, 1 a verification case failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import exact
from .harness import SUITES, SuiteParams, UnknownSuite, render_report, run_suite
from .mpcover import FactoredWord, Irreducible, Parabolic, Sigma, cocycle
from .scalars import AdditiveCharacter, as_place, hilbert, weil_index, weil_index_oracle
from .spgroup import bruhat_decompose, is_symplectic, siegel_det

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(ValueError):
    pass


def _rational(text: str) -> Fraction:
    try:
        return exact.frac(text)
    except (ValueError, ZeroDivisionError, TypeError) as err:
        raise InputError(f"not a rational number: {text!r}") from err


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror}") from err
    except json.JSONDecodeError as err:
        raise InputError(f"{path} is not valid JSON: {err}") from err


def _matrix(rows):
    try:
        return exact.mat(rows)
    except (ValueError, TypeError, ZeroDivisionError) as err:
        raise InputError(f"bad matrix: {err}") from err


def load_matrix(path: str, n: int | None = None):
    g = _matrix(_load_json(path))
    if n is not None and g.shape != (2 * n, 2 * n):
        raise InputError(f"matrix must be {2 * n}x{2 * n}, got {g.shape[0]}x{g.shape[1]}")
    if not is_symplectic(g):
        raise InputError("matrix is not symplectic")
    return g


def word_from_json(doc) -> FactoredWord:
    """[{"type": "parabolic", "matrix": [...]}, {"type": "sigma", "S": [...]}, ...]."""
    if not isinstance(doc, list):
        raise InputError("a word is a JSON list of letters")
    letters, n = [], None
    sigma_sets = []
    for item in doc:
        if not isinstance(item, dict) or item.get("type") not in ("parabolic", "sigma"):
            raise InputError(f"bad letter {item!r}")
        if item["type"] == "parabolic":
            g = _matrix(item.get("matrix", []))
            if g.shape[0] != g.shape[1] or g.shape[0] % 2 or not is_symplectic(g):
                raise InputError("parabolic letter is not a symplectic matrix")
            if n is not None and g.shape[0] != 2 * n:
                raise InputError("letters of different sizes")
            n = g.shape[0] // 2
            try:
                letters.append(Parabolic(g))
            except ValueError as err:
                raise InputError(str(err)) from err
        else:
            S = item.get("S", [])
            if not isinstance(S, list) or not all(isinstance(i, int) for i in S):
                raise InputError("sigma letter needs an integer list S")
            letters.append(Sigma(tuple(S)))
            sigma_sets.append(S)
    if n is None:
        # only sigma letters: the size comes from an explicit "n" or the largest index
        n = max([int(item.get("n", 0)) for item in doc] + [max(S) for S in sigma_sets if S])
        if n < 1:
            raise InputError("cannot infer n from a word with no parabolic letter")
    for S in sigma_sets:
        if any(not 1 <= i <= n for i in S):
            raise InputError(f"sigma subset {S} not inside 1..{n}")
    return FactoredWord(n, letters)


def word_to_json(word: FactoredWord) -> list:
    out = []
    for letter in word.letters:
        if isinstance(letter, Parabolic):
            out.append({"type": "parabolic", "matrix": exact.to_strings(letter.mat)})
        else:
            out.append({"type": "sigma", "S": list(letter.S)})
    return out


def _cmd_hilbert(args) -> int:
    a, b = _rational(args.a), _rational(args.b)
    if a == 0 or b == 0:
        raise InputError("Hilbert symbol needs nonzero arguments")
    print(hilbert(a, b, as_place(args.place)))
    return EXIT_OK


def _cmd_weil(args) -> int:
    a = _rational(args.a)
    shift = _rational(args.shift)
    if a == 0 or shift == 0:
        raise InputError("Weil index needs nonzero a and shift")
    place = as_place(args.place)
    if place.is_real:
        raise InputError("weil-index needs a finite place")
    psi = AdditiveCharacter(place.p, shift)
    value = weil_index_oracle(a, psi) if args.oracle else weil_index(a, psi)
    print(value.exponent)
    return EXIT_OK


def _cmd_bruhat(args) -> int:
    g = load_matrix(args.matrix, args.n)
    p1, S, p2 = bruhat_decompose(g)
    x = siegel_det(p1) * siegel_det(p2)
    doc = {"p1": exact.to_strings(p1), "S": list(S), "p2": exact.to_strings(p2),
           "x": f"{x.numerator}/{x.denominator}"}
    print(json.dumps(doc))
    return EXIT_OK


def _cmd_cocycle(args) -> int:
    w1 = word_from_json(_load_json(args.word1))
    w2 = word_from_json(_load_json(args.word2))
    if w1.n != w2.n:
        raise InputError("words act on different symplectic spaces")
    try:
        print(cocycle(w1, w2, as_place(args.place), args.backend))
    except Irreducible:
        print("irreducible")
    return EXIT_OK


def _primes(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(int(p) for p in text.replace(" ", "").split(",") if p)
    except ValueError as err:
        raise InputError(f"bad prime list {text!r}") from err
    return primes


def _cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}")
    try:
        params = SuiteParams(n_max=args.n_max, primes=_primes(args.primes),
                             trials=args.trials, seed=args.seed)
    except ValueError as err:
        raise InputError(str(err)) from err
    report = run_suite(args.suite, params)
    sys.stdout.buffer.write(render_report(report, "json" if args.json else "text"))
    sys.stdout.flush()
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="metaplectic",
                                     description="Exact metaplectic cover computations over Q_v.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert symbol (A, B)_v")
    p.add_argument("--place", required=True, help="a prime or 'real'")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("weil-index", help="Weil index of x -> psi_c(A x^2) as an exponent mod 8")
    p.add_argument("--place", required=True, help="a prime")
    p.add_argument("--shift", default="1", help="c in psi_c (default 1)")
    p.add_argument("--oracle", action="store_true", help="use the Gauss-sum oracle")
    p.add_argument("a")
    p.set_defaults(func=_cmd_weil)

    p = sub.add_parser("bruhat", help="Siegel-parabolic Bruhat decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matrix", required=True, help="JSON file with a 2n x 2n matrix")
    p.set_defaults(func=_cmd_bruhat)

    p = sub.add_parser("cocycle", help="Rao's cocycle of two words")
    p.add_argument("--place", required=True)
    p.add_argument("--word1", required=True)
    p.add_argument("--word2", required=True)
    p.add_argument("--backend", choices=["word", "leray"], default="word")
    p.set_defaults(func=_cmd_cocycle)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, help=", ".join(list(SUITES) + ["all"]))
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--primes", default="2,3,5")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, UnknownSuite, ValueError, ArithmeticError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
