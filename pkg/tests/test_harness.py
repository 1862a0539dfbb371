import json
import random

import pytest
from hypothesis import given, strategies as st

from ukruskal import combinators as C
from ukruskal import harness as H
from ukruskal.dilator import ExprDilator
from ukruskal.finposet import antichain, chain
from ukruskal.kruskal import TWUniverse

from strategies import posets


def test_longest_bad_on_chains_and_antichains():
    # the descending enumeration is bad, so a chain of n points admits length n
    c = H.longest_bad(H.OrderOracle(tuple(range(5)), int.__le__), 10)
    assert c.longest == 5 and c.witness == [4, 3, 2, 1, 0] and c.exhaustive
    a = H.longest_bad(H.OrderOracle(tuple(range(4)), lambda x, y: x == y), 10)
    assert a.longest == 4


@given(posets(6))
def test_longest_bad_matches_brute_force(X):
    rep = H.longest_bad(H.OrderOracle(X.elems, X.le), len(X))
    assert rep.longest == H.brute_force_longest_bad(X.elems, X.le)
    assert H.is_bad(rep.witness, X.le)
    ext = H.reverse_linear_extension(list(X.elems), X.le)
    assert H.is_bad(ext, X.le) and sorted(ext) == sorted(X.elems)


@given(posets(6))
def test_antichain_width_by_brute_force(X):
    from itertools import combinations
    best = max((k for k in range(len(X) + 1) for s in combinations(X.elems, k)
                if not any(X.lt(x, y) or X.lt(y, x) for x, y in combinations(s, 2))), default=0)
    assert H.antichain_width(list(X.elems), X.le) == best


def test_oracle_labels_agree_with_canonical_form():
    from ukruskal.finposet import canonicalize, posets_upto
    for X in posets_upto(4):
        assert tuple(H.oracle_labels(X.elems, X.le)) == canonicalize(X).en


@pytest.fixture
def fresh_universes():
    H.tw_universe.cache_clear()
    yield
    H.tw_universe.cache_clear()


class MutantUniverse(TWUniverse):
    """Order bug: any two terms of size 3 compare both ways."""

    def _leq(self, s, t):
        return s.size == t.size == 3 or super()._leq(s, t)


class FlippedUniverse(TWUniverse):
    """Subtler bug: the two one-letter words swap places, which is still a partial order."""

    def _leq(self, s, t):
        out = super()._leq(s, t)
        return (not out) if s.size == t.size == 3 else out


def small_dilators():
    return {"W_Z(2-chain)": (ExprDilator(C.w_z(chain(2))), 7)}


def test_injected_order_bug_is_reported(monkeypatch, fresh_universes):
    monkeypatch.setattr(H, "TWUniverse", MutantUniverse)
    monkeypatch.setattr(H, "acceptance_dilators",
                        lambda: {"W_Z(2-chain)": (ExprDilator(C.w_z(chain(2))), 15)})
    r = H.run_criterion(2, H.SuiteConfig())
    assert not r.passed
    # the bug already surfaces while ordering child sets during enumeration
    assert "antisymmetry" in str(r.counterexample)


def test_injected_order_bug_breaks_oracle_agreement(monkeypatch, fresh_universes):
    monkeypatch.setattr(H, "TWUniverse", FlippedUniverse)
    monkeypatch.setattr(H, "acceptance_dilators", small_dilators)
    monkeypatch.setattr(H, "lo_dilators", lambda: {})
    assert H.run_criterion(2, H.SuiteConfig()).counterexample.get("axiom") is None
    r = H.run_criterion(12, H.SuiteConfig(random_pairs=5))
    assert not r.passed and r.counterexample["order"] == "tw"


def test_crashing_criterion_becomes_failure(monkeypatch):
    def boom(cfg):
        raise RuntimeError("kaput")
    monkeypatch.setattr(H, "CRITERIA", H.CRITERIA[:9] + [boom] + H.CRITERIA[10:])
    r = H.run_criterion(10, H.SuiteConfig())
    assert not r.passed and "kaput" in r.counterexample


def test_reports_are_reproducible():
    cfg = H.SuiteConfig(only=(10, 11), jobs=1)
    a, b = H.run_suite(cfg), H.run_suite(cfg)
    for x in (a, b):
        for c in x["criteria"]:
            c.pop("seconds")
    assert a == b
    assert a["seed"] == H.DEFAULT_SEED and a["failures"] == 0
    json.dumps(a, default=str)
    text = H.report_text(H.run_suite(cfg))
    assert "criterion 10 PASS" in text and text.endswith("0 failure(s)")


def test_unknown_criterion_rejected():
    with pytest.raises(ValueError):
        H.run_suite(H.SuiteConfig(only=(99,)))


def test_random_terms_are_valid_and_seeded():
    W = ExprDilator(C.w_a(chain(2)))

    def pool(seed):
        U = TWUniverse(W)
        ts = H.random_terms(U.build, lambda c, p: W.trace_of_size(antichain(c), p),
                            random.Random(seed), 30, 10)
        return [t.sexpr for t in ts]

    assert pool(1) == pool(1)
    assert len(set(pool(1))) == 30


def test_default_jobs_reads_environment(monkeypatch):
    monkeypatch.setenv("UKRUSKAL_JOBS", "3")
    assert H.default_jobs() == 3
    monkeypatch.setenv("UKRUSKAL_JOBS", "zero")
    assert H.default_jobs() >= 1


@given(st.integers(0, 6))
def test_brute_force_on_antichains(n):
    assert H.brute_force_longest_bad(tuple(range(n)), lambda x, y: x == y) == n
