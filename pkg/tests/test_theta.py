import random
from collections import Counter
from itertools import combinations, product

import pytest

from ukruskal import combinators as C
from ukruskal.dilator import ExprDilator, TraceError
from ukruskal.finposet import chain
from ukruskal.harness import deep_recursion, oracle_theta_table, random_terms
from ukruskal.kruskal import BoundError
from ukruskal.theta import OrderError, ThetaSystem

import counting

D1 = ExprDilator(C.SumLex(C.ConstL(1), C.Id()), "LO")
D2 = ExprDilator(C.one_plus_two_x_squared())
BASE = C.Inl(C.CElem(0))
STEP = C.Inr(C.Leaf(0))


@pytest.mark.parametrize("D,payloads,bound", [(D1, counting.sum_lex_one_id, 40),
                                              (D2, counting.one_plus_two_x_squared, 12)],
                         ids=["D1", "D2"])
def test_counts_by_size_match_generating_functions(D, payloads, bound):
    with deep_recursion():
        terms = ThetaSystem(D).enumerate(bound)
    by_size = Counter(t.size for t in terms)
    assert [by_size.get(n, 0) for n in range(bound + 1)] == counting.term_counts(payloads, bound)


def test_identity_dilator_has_no_terms():
    assert ThetaSystem(ExprDilator(C.Id(), "LO")).enumerate(6) == []


def test_base_term_and_successor():
    S = ThetaSystem(D1)
    zero = S.build([], BASE)
    one = S.build([zero], STEP)
    assert S.lt(zero, one) and not S.lt(one, zero)
    assert S.compare(zero, zero) == 0 and S.compare(one, zero) == 1
    assert one.length >= 1 + 2 * zero.length
    assert zero.length == max(zero.code, 1)


def test_build_checks_trace_and_owner():
    S = ThetaSystem(D1)
    zero = S.build([], BASE)
    with pytest.raises(TraceError):
        S.build([zero], BASE)
    with pytest.raises(OrderError):
        ThetaSystem(D1).build([zero], STEP)
    with pytest.raises(ValueError):
        ThetaSystem(ExprDilator(C.w_z(chain(1))))


def test_d1_is_a_chain_of_successors():
    """Each term of D1 has exactly one term of every size, each above the last."""
    S = ThetaSystem(D1)
    with deep_recursion():
        terms = S.enumerate(30)
        assert [t.size for t in terms] == list(range(1, 31))
        assert all(S.lt(s, t) for s, t in zip(terms, terms[1:]))


def test_strict_linear_order_on_d2_fragment():
    S = ThetaSystem(D2)
    terms = S.enumerate(10)
    for s, t in product(terms, repeat=2):
        assert (s == t) + S.lt(s, t) + S.lt(t, s) == 1
    ordered = S.sort(terms)
    assert all(S.lt(a, b) for a, b in zip(ordered, ordered[1:]))
    for a, b, c in combinations(ordered[:40], 3):
        assert S.lt(a, c)


def test_order_matches_bottom_up_oracle():
    S = ThetaSystem(D2)
    terms = S.enumerate(11)
    table = oracle_theta_table(D2, terms)
    assert all(S.lt(s, t) == table[s, t] for s, t in product(terms, repeat=2))


@pytest.mark.parametrize("seed", range(3))
def test_random_deep_terms_match_oracle(seed):
    rng = random.Random(seed)
    S = ThetaSystem(D2)
    pool = random_terms(S.build, lambda c, p: D2.trace_of_size(chain(c), p), rng, 40, 14, 2)
    table = oracle_theta_table(D2, pool)
    for _ in range(400):
        s, t = rng.choice(pool), rng.choice(pool)
        assert S.lt(s, t) == table[s, t]


def test_enumeration_cap():
    with pytest.raises(BoundError):
        ThetaSystem(D2).enumerate(14, cap=30)
