"""Acceptance criteria 1 to 13, exact and exhaustive at the stated bounds.

Each test prints one ``criterion NN PASS|FAIL: ...`` line.  Running this
file directly (``python3 tests/test_acceptance.py``) prints the same lines
and exits non-zero on any failure.
"""

import json
import sys

import pytest

from ukruskal.harness import CRITERIA, SuiteConfig, run_criterion

CFG = SuiteConfig()

pytestmark = pytest.mark.acceptance


def _detail(res):
    return json.dumps({"seconds": res.seconds, "counts": res.counts,
                       "counterexample": res.counterexample}, default=str)


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1), ids=lambda k: f"criterion{k:02d}")
def test_criterion(k, capsys):
    res = run_criterion(k, CFG)
    with capsys.disabled():
        print(f"\n{res.line()}  [{res.seconds:.1f}s]")
    assert res.passed, f"{res.line()}\n{_detail(res)}"
    # the bounds promise desk-scale checks
    assert res.seconds < 120, f"criterion {k} took {res.seconds}s"


if __name__ == "__main__":
    failures = 0
    for k in range(1, len(CRITERIA) + 1):
        res = run_criterion(k, CFG)
        print(f"{res.line()}  [{res.seconds:.1f}s]", flush=True)
        failures += not res.passed
    sys.exit(1 if failures else 0)
