"""The nine acceptance criteria, at their stated ranges, sizes and time limits.

Each test prints one PASS/FAIL line; the lines are also collected into the
terminal summary so they show up without ``-s``.
"""

import subprocess
import sys
import time
from itertools import product

from conftest import ACCEPTANCE_LINES
from metaplectic.harness import SuiteParams, run_suite
from metaplectic.scalars import hilbert

PRIMES = (2, 3, 5)


def _record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


def _timed(name: str, params: SuiteParams):
    start = time.perf_counter()
    report = run_suite(name, params)
    return report, time.perf_counter() - start


def _by_name(report, name):
    return [c for c in report.cases if c.name == name]


def _failures(report):
    return [c.to_dict() for c in report.failures()][:5]


def test_criterion_1_symplectic_representative():
    report, elapsed = _timed("prop-ls-sp", SuiteParams(n_max=4, primes=PRIMES))
    cases = _by_name(report, "letter-product")
    combos = {(c.params["n"], c.params["k"], c.params["place"]) for c in cases}
    expected = {(n, k, str(p)) for n in range(1, 5) for k in range(1, n + 1) for p in PRIMES}
    # the sign must carry eps_LS: at p = 2 it is -1 exactly when k(k-1)/2 is odd
    signs_ok = all(c.computed["eps"] == hilbert(-1, -1, int(c.params["place"]))
                   ** (c.params["k"] * (c.params["k"] - 1) // 2 % 2) for c in cases)
    ok = report.passed and combos == expected and signs_ok and elapsed <= 60
    _record(1, ok, f"{report.passed_count}/{len(report.cases)} cases, {elapsed:.1f}s (limit 60s)")
    assert ok, _failures(report)


def test_criterion_2_orthogonal_representative():
    report, elapsed = _timed("prop-ls-so", SuiteParams(n_max=4, primes=PRIMES))
    cases = _by_name(report, "letter-product")
    combos = {(c.params["n"], c.params["k"]) for c in cases}
    expected = {(n, k) for n in range(1, 5) for k in range(1, n + 1)}
    ok = report.passed and combos == expected and elapsed <= 10
    _record(2, ok, f"{report.passed_count}/{len(report.cases)} cases, {elapsed:.1f}s (limit 10s)")
    assert ok, _failures(report)


def test_criterion_3_sigma_cocycle_table():
    primes = (2, 3, 5, 7)
    report, elapsed = _timed("cocycle-table", SuiteParams(n_max=3, primes=primes))
    word = _by_name(report, "sigma-pair-word")
    pairs = sum(4 ** n for n in range(1, 4)) * len(primes)
    ok = report.passed and len(word) == pairs and elapsed <= 30
    _record(3, ok, f"{len(word)} pairs x 2 backends, {elapsed:.1f}s (limit 30s)")
    assert ok, _failures(report)


def test_criterion_4_proof_chain():
    report, _ = _timed("proof-chain", SuiteParams(n_max=4, primes=PRIMES))
    needed = {"v-closed-form", "z-closed-form", "v-z-commute", "z-product", "z-product-lift",
              "v-product-lift", "c-v-tail"}
    names = {c.name for c in report.cases}
    c_tail = _by_name(report, "c-v-tail")
    expected_tail = {(n, k, i, str(p)) for n in range(1, 5) for k in range(1, n + 1)
                     for i in range(1, k) for p in PRIMES}
    got_tail = {(c.params["n"], c.params["k"], c.params["i"], c.params["place"]) for c in c_tail}
    ok = report.passed and needed <= names and got_tail == expected_tail
    _record(4, ok, f"{report.passed_count}/{len(report.cases)} cases")
    assert ok, _failures(report)


def test_criterion_5_hilbert_laws():
    report, _ = _timed("hilbert-laws", SuiteParams(n_max=1, primes=PRIMES, trials=1000))
    places = {c.params["place"] for c in _by_name(report, "bimultiplicativity")}
    product_case = _by_name(report, "product-formula")
    ok = (report.passed and places == {"2", "3", "5", "real"}
          and product_case and product_case[0].params["trials"] == 1000)
    _record(5, ok, f"{report.passed_count}/{len(report.cases)} cases, product formula on 1000 pairs")
    assert ok, _failures(report)


def test_criterion_6_weil_index():
    report, _ = _timed("weil-oracle", SuiteParams(n_max=3, primes=PRIMES))
    oracle = _by_name(report, "closed-vs-oracle")
    defect = _by_name(report, "normalized-index-hilbert")
    v_cases = _by_name(report, "weil-index-of-V")
    ok = (report.passed and len(oracle) == 3 * 4 * 2 + 3 * 8
          and len(defect) == 2 * 16 + 64
          and {(c.params["n"], c.params["epsilon"]) for c in v_cases}
          == {(n, e) for n, e in product(range(4), (1, -1)) if not (n == 0 and e == -1)})
    _record(6, ok, f"{report.passed_count}/{len(report.cases)} cases")
    assert ok, _failures(report)


def test_criterion_7_bruhat():
    report, _ = _timed("bruhat", SuiteParams(n_max=4, primes=PRIMES, trials=1000))
    recon = _by_name(report, "reconstruction")[0]
    xinv = _by_name(report, "x-invariance")[0]
    ok = report.passed and recon.params["trials"] == 1000 and xinv.params["trials"] == 200
    _record(7, ok, "reconstruction on 1000 elements, x-invariance on 200")
    assert ok, _failures(report)


def test_criterion_8_cover_laws():
    params = SuiteParams(n_max=4, primes=PRIMES, trials=500)
    levi, _ = _timed("levi-cover", params)
    assoc, _ = _timed("mp-associativity", params)
    table, _ = _timed("cocycle-table", SuiteParams(n_max=3, primes=PRIMES))
    word = _by_name(assoc, "cocycle-identity-word")[0]
    cross = _by_name(assoc, "cross-backend")[0]
    ok = (levi.passed and assoc.passed and table.passed
          and word.computed[0] == 500 and cross.computed[0] == 500
          and all(_by_name(assoc, n) for n in ("centre-order-two", "centre-commutes"))
          and _by_name(table, "sigma-pair-leray"))
    _record(8, ok, "500 word triples, 500 Levi pairs, 500 unipotent pairs, centre, "
                   "500 cross-backend pairs, sigma table")
    assert ok, _failures(levi) + _failures(assoc) + _failures(table)


def test_criterion_9_determinism(tmp_path):
    # two complete default runs, a few minutes each
    cmd = [sys.executable, "-m", "metaplectic", "verify", "--suite", "all", "--seed", "0",
           "--json"]
    outputs = []
    for _ in range(2):
        proc = subprocess.run(cmd, capture_output=True, check=False, cwd=tmp_path)
        outputs.append(proc)
    same = outputs[0].stdout == outputs[1].stdout and bool(outputs[0].stdout)
    codes = [p.returncode for p in outputs]
    ok = same and codes == [0, 0]
    _record(9, ok, f"two runs byte-identical: {same}, exit codes {codes}, "
                   f"{len(outputs[0].stdout)} bytes")
    assert ok, outputs[0].stderr.decode()[-2000:]
