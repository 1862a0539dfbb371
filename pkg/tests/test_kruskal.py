import random
from collections import Counter
from itertools import product

import pytest

from ukruskal import combinators as C
from ukruskal.dilator import ExprDilator, TraceError
from ukruskal.finposet import antichain, chain
from ukruskal.harness import oracle_higman, oracle_tw_table, random_terms
from ukruskal.kruskal import BoundError, FixedPoint, TWUniverse, UniverseError, seq_fixed_point, subterms

import counting

Z1, Z2, A2 = chain(1), chain(2), antichain(2)


def universe(expr):
    return TWUniverse(ExprDilator(expr))


@pytest.mark.parametrize("expr,payloads,bound", [
    (C.w_z(Z2), counting.w_z(2), 13),
    (C.w_z(A2), counting.w_z(2), 13),
    (C.w_a(Z2), counting.w_a(2), 8),
    (C.OnePlus(C.Higman(C.Id())), counting.one_plus_seq, 6),
], ids=["wz-chain", "wz-antichain", "wa", "one-plus-higman"])
def test_counts_by_size_match_generating_functions(expr, payloads, bound):
    terms = universe(expr).enumerate(bound)
    by_size = Counter(t.size for t in terms)
    want = counting.term_counts(payloads, bound)
    assert [by_size.get(n, 0) for n in range(bound + 1)] == want
    assert len(set(terms)) == len(terms)


def test_empty_base_gives_empty_universe():
    assert universe(C.Id()).enumerate(1) == []
    assert len(universe(C.Higman(C.Id())).enumerate(1)) == 1  # the empty sequence
    assert universe(C.Prod(C.Const(Z2), C.Id())).enumerate(6) == []


def test_build_rejects_non_trace_payloads():
    U = universe(C.w_z(Z2))
    leaf = U.build([], C.Zero())
    with pytest.raises(TraceError):
        U.build([leaf], C.Zero())  # support is empty, not {0}
    with pytest.raises(TraceError):
        U.build([], C.Lift(C.Pair(C.CElem(0), C.Leaf(0))))
    other = universe(C.w_z(Z2))
    with pytest.raises(UniverseError):
        other.build([leaf], C.Lift(C.Pair(C.CElem(0), C.Leaf(0))))


def test_length_and_height():
    U = universe(C.w_z(Z1))
    leaf = U.build([], C.Zero())
    assert leaf.height == 0 and leaf.length == max(leaf.code, 1)
    t = U.build([leaf], C.Lift(C.Pair(C.CElem(0), C.Leaf(0))))
    u = U.build([t], C.Lift(C.Pair(C.CElem(0), C.Leaf(0))))
    assert t.height == 1 and u.height == 2
    assert t.length >= 1 + 2 * leaf.length and u.length > t.length


def test_code_is_injective_on_a_universe():
    terms = universe(C.w_a(Z2)).enumerate(7)
    assert len({t.code for t in terms}) == len(terms)
    for t in terms:
        for c in t.children:
            assert 2 * sum(x.length for x in t.children) < t.length
            assert c.length < t.length


def test_empty_sequence_below_singleton():
    U = universe(C.w_z(Z1))
    empty = U.build([], C.Zero())
    one = U.build([empty], C.Lift(C.Pair(C.CElem(0), C.Leaf(0))))
    assert U.leq(empty, one) and not U.leq(one, empty)


def test_seq_isomorphism_on_a_singleton():
    U = universe(C.w_z(Z1))
    terms = U.enumerate(9)
    f = U.initial_map(seq_fixed_point(Z1))
    images = [f(t) for t in terms]
    assert sorted(images, key=len) == [(0,) * n for n in range(5)]
    assert f(U.build([], C.Zero())) == ()


@pytest.mark.parametrize("Z", [Z2, A2], ids=["chain", "antichain"])
def test_initial_map_reflects_and_preserves_order(Z):
    U = universe(C.w_z(Z))
    terms = U.enumerate(7)
    f = U.initial_map(seq_fixed_point(Z))
    for s, t in product(terms, repeat=2):
        assert U.leq(s, t) == oracle_higman(Z.le, f(s), f(t))


def test_initial_map_to_itself_is_identity():
    U = universe(C.w_a(Z2))
    f = U.initial_map(FixedPoint(U.leq, U.kappa))
    assert all(f(t) is t for t in U.enumerate(7))


def test_fixed_point_law_on_small_universe():
    U = universe(C.OnePlus(C.Higman(C.Id())))
    terms = U.enumerate(5)
    assert U.check_fixed_point(terms) == []


@pytest.mark.parametrize("expr", [C.w_z(A2), C.w_a(Z2), C.OnePlus(C.Higman(C.Id()))], ids=repr)
def test_order_matches_bottom_up_oracle(expr):
    U = universe(expr)
    terms = U.enumerate(6)
    table = oracle_tw_table(U.W, terms)
    assert all(U.leq(s, t) == table[s, t] for s, t in product(terms, repeat=2))


@pytest.mark.parametrize("seed", range(3))
def test_random_deep_terms_match_oracle(seed):
    rng = random.Random(seed)
    W = ExprDilator(C.w_a(A2))
    U = TWUniverse(W)
    pool = random_terms(U.build, lambda c, p: W.trace_of_size(antichain(c), p), rng, 40, 12)
    table = oracle_tw_table(W, pool)
    for _ in range(400):
        s, t = rng.choice(pool), rng.choice(pool)
        assert U.leq(s, t) == table[s, t]


def test_enumeration_cap():
    with pytest.raises(BoundError):
        universe(C.w_a(Z2)).enumerate(9, cap=50)


def test_subterms_and_dot():
    U = universe(C.w_z(Z2))
    terms = U.enumerate(5)
    deepest = max(terms, key=lambda t: t.height)
    assert len(list(subterms(deepest))) == deepest.height + 1
    dot = U.hasse_dot(terms[:3])
    assert dot.startswith("digraph TW {") and dot.rstrip().endswith("}")
