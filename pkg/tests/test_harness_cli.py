"""Verification suites, report serialisation and the command line."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from metaplectic import cli, exact, harness, mpcover, qforms, scalars, soodd, spgroup, weylreps
from metaplectic.harness import (
    Case,
    SuiteParams,
    UnknownSuite,
    VerificationReport,
    render_report,
    report_from_json,
    run_suite,
)
from metaplectic.mpcover import FactoredWord, Parabolic, Sigma
from metaplectic.scalars import square_class
from metaplectic.spgroup import m_n, sigma

SMALL = SuiteParams(n_max=2, primes=(2, 3), trials=4, seed=1)


# --- suites --------------------------------------------------------------

def test_prop_ls_sp_small():
    report = run_suite("prop-ls-sp", SuiteParams(n_max=2, primes=(2,)))
    assert report.passed
    case = next(c for c in report.cases
                if c.name == "letter-product" and c.params["n"] == 1 and c.params["k"] == 1)
    assert case.computed == {"g": [["0/1", "1/1"], ["-1/1", "0/1"]], "eps": 1}
    assert case.computed == case.expected


def test_cocycle_table_at_three_is_trivial():
    report = run_suite("cocycle-table", SuiteParams(n_max=2, primes=(3,)))
    assert report.passed and report.cases
    assert all(c.computed == 1 for c in report.cases)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nonexistent", SMALL)


@pytest.mark.parametrize("name", list(harness.SUITES))
def test_each_suite_passes_small(name):
    report = run_suite(name, SMALL)
    assert report.cases
    assert report.passed, [c.to_dict() for c in report.failures()]
    assert report.passed_count + report.failed_count == len(report.cases)


def test_params_validation():
    with pytest.raises(ValueError):
        SuiteParams(n_max=0)
    with pytest.raises(ValueError):
        SuiteParams(primes=())
    with pytest.raises(ValueError):
        SuiteParams(primes=(4,))


# --- reports -------------------------------------------------------------

def test_empty_report_json():
    doc = json.loads(render_report(VerificationReport("bruhat", {}, []), "json"))
    assert doc["suite"] == "bruhat" and doc["cases"] == [] and doc["pass"] is True


def test_json_round_trip_and_determinism():
    a = run_suite("hilbert-laws", SMALL)
    b = run_suite("hilbert-laws", SMALL)
    ja, jb = render_report(a, "json"), render_report(b, "json")
    assert ja == jb
    assert report_from_json(ja) == a


def test_failing_case_listed_in_both_formats():
    bad = Case("bruhat", "reconstruction", {"n": 1}, 1, -1, False, "mismatch")
    r = VerificationReport("bruhat", {}, [bad])
    assert not r.passed
    assert b"mismatch" in render_report(r, "json")
    assert b"mismatch" in render_report(r, "text")


def test_irreducible_becomes_failing_case(monkeypatch):
    def suite(params, rng, out):
        w1 = FactoredWord(1, (Sigma((1,)), Parabolic(spgroup.n_c(exact.mat([[1]]), 1))))
        w2 = FactoredWord(1, (Sigma((1,)),))
        out.check("pair", {}, lambda: 1, lambda: mpcover.cocycle_word(w1, w2, 3))

    monkeypatch.setitem(harness.SUITES, "bruhat", suite)
    report = run_suite("bruhat", SMALL)
    assert not report.passed
    assert report.cases[0].detail.startswith("irreducible")


def test_verify_exit_code_on_failure(monkeypatch, capsys):
    def suite(params, rng, out):
        out.add("always-wrong", {}, 1, -1)

    monkeypatch.setitem(harness.SUITES, "bruhat", suite)
    assert cli.main(["verify", "--suite", "bruhat", "--json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["pass"] is False and doc["summary"]["failed"] == 1


# --- coverage of the operations ------------------------------------------

OPERATIONS = [
    scalars.square_class, scalars.hilbert, scalars.weil_index_oracle, scalars.weil_index,
    scalars.normalized_weil_index,
    qforms.diagonalize, qforms.invariants, qforms.witt_equivalent, qforms.weil_index_form,
    qforms.kashiwara_form,
    spgroup.generator, spgroup.bruhat_decompose, spgroup.x_function,
    mpcover.cocycle_word, mpcover.cocycle_leray, mpcover.mp_multiply, mpcover.mp_invert,
    mpcover.lift_word, mpcover.ml_multiply,
    weylreps.wM_word, weylreps.root_vector, weylreps.exp_nilpotent,
    weylreps.ls_representative, weylreps.target_representative,
    soodd.orth_space, soodd.so_generator, soodd.max_isotropic_dim,
]


def test_all_suites_exercise_every_operation():
    weylreps._tits_cached.cache_clear()
    wanted = {f.__code__: f"{f.__module__}.{f.__name__}" for f in OPERATIONS}
    seen = set()

    def profiler(frame, event, arg):
        if event == "call" and frame.f_code in wanted:
            seen.add(frame.f_code)

    sys.setprofile(profiler)
    try:
        report = run_suite("all", SuiteParams(n_max=2, primes=(2, 3), trials=3, seed=0))
    finally:
        sys.setprofile(None)
    assert report.passed
    missing = sorted(name for code, name in wanted.items() if code not in seen)
    assert not missing, missing


# --- command line --------------------------------------------------------

def _run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_cli_hilbert(capsys):
    assert _run(capsys, "hilbert", "--place", "2", "-1", "-1")[:2] == (0, "-1")
    assert _run(capsys, "hilbert", "--place", "real", "-1", "3/7")[:2] == (0, "1")
    assert _run(capsys, "hilbert", "--place", "4", "1", "1")[0] == 2
    assert _run(capsys, "hilbert", "--place", "3", "0", "1")[0] == 2
    assert _run(capsys, "hilbert", "--place", "3", "x", "1")[0] == 2


def test_cli_weil_index(capsys):
    closed = _run(capsys, "weil-index", "--place", "5", "3")
    oracle = _run(capsys, "weil-index", "--place", "5", "--oracle", "3")
    assert closed[0] == oracle[0] == 0 and closed[1] == oracle[1]
    assert 0 <= int(closed[1]) <= 7
    assert _run(capsys, "weil-index", "--place", "real", "3")[0] == 2


def test_cli_bruhat(tmp_path, capsys):
    g = sigma([1], 2) @ m_n(exact.mat([[2, 1], [0, 1]]))
    path = tmp_path / "g.json"
    path.write_text(json.dumps(exact.to_strings(g)))
    code, out, _ = _run(capsys, "bruhat", "--n", "2", "--matrix", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["S"] == [1]
    for v in (2, 3, 5):
        assert square_class(Fraction(doc["x"]), v) == square_class(2, v)
    p1, p2 = exact.from_strings(doc["p1"]), exact.from_strings(doc["p2"])
    assert exact.equal(p1 @ sigma(doc["S"], 2) @ p2, g)
    path.write_text(json.dumps([[1, 1], [0, 1], [0, 0], [1, 0]]))
    assert _run(capsys, "bruhat", "--n", "2", "--matrix", str(path))[0] == 2
    assert _run(capsys, "bruhat", "--n", "2", "--matrix", str(tmp_path / "missing.json"))[0] == 2


def test_cli_cocycle(tmp_path, capsys):
    w = tmp_path / "w.json"
    w.write_text(json.dumps([{"type": "sigma", "S": [1]}]))
    for backend in ("word", "leray"):
        code, out, _ = _run(capsys, "cocycle", "--place", "2", "--word1", str(w), "--word2",
                            str(w), "--backend", backend)
        assert (code, out) == (0, "-1")
    u = tmp_path / "u.json"
    u.write_text(json.dumps([{"type": "sigma", "S": [1]},
                             {"type": "parabolic", "matrix": [["1", "1"], ["0", "1"]]}]))
    code, out, _ = _run(capsys, "cocycle", "--place", "3", "--word1", str(u), "--word2", str(w))
    assert (code, out) == (0, "irreducible")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([{"type": "parabolic", "matrix": [["0", "-1"], ["1", "0"]]}]))
    assert _run(capsys, "cocycle", "--place", "3", "--word1", str(bad), "--word2", str(w))[0] == 2


def test_word_json_round_trip():
    word = FactoredWord(2, (Parabolic(m_n(exact.mat([[1, 2], [0, -1]]))), Sigma((2,))))
    back = cli.word_from_json(cli.word_to_json(word))
    assert exact.equal(back.product, word.product)
    with pytest.raises(cli.InputError):
        cli.word_from_json([{"type": "sigma", "S": [3]}, {"type": "parabolic",
                                                         "matrix": exact.to_strings(exact.identity(4))}])


def test_cli_verify(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "weil-oracle", "--n-max", "1",
                        "--primes", "3", "--trials", "2")
    assert code == 0 and "PASS" in out
    assert _run(capsys, "verify", "--suite", "nope")[0] == 2
    assert _run(capsys, "verify", "--suite", "bruhat", "--primes", "4")[0] == 2
    assert _run(capsys, "verify")[0] == 2
    assert _run(capsys, "frobnicate")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "metaplectic", "hilbert", "--place", "5", "2", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "-1"
