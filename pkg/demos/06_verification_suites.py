"""
Running the verification suites
===============================

The harness collects exact pass/fail cases per identity; the same run can be
rendered as a text table or as deterministic JSON. The CLI equivalent is
``python3 -m metaplectic verify --suite NAME``.
"""

from metaplectic.harness import SUITES, SuiteParams, render_report, run_suite

params = SuiteParams(n_max=2, primes=(2, 3), trials=20, seed=0)
print("suites:", ", ".join(SUITES))

for name in ("cocycle-table", "proof-chain", "weil-oracle"):
    report = run_suite(name, params)
    print(render_report(report, "text").decode())

# JSON is byte-stable for a fixed seed
a = render_report(run_suite("bruhat", params), "json")
b = render_report(run_suite("bruhat", params), "json")
print("bruhat JSON identical across runs:", a == b, f"({len(a)} bytes)")
