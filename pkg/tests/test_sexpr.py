import pytest
from hypothesis import given, strategies as st

from ukruskal import combinators as C
from ukruskal.dilator import ExprDilator
from ukruskal.finposet import FinPoset, antichain, chain
from ukruskal.kruskal import TWUniverse
from ukruskal.sexpr import (ParseError, dilator_to_sexpr, parse_cnf, parse_dilator, parse_elem,
                            parse_emb, parse_poset, parse_theta_term, parse_tw_term, read, show)
from ukruskal.theta import ThetaSystem
from ukruskal.wd import Cnf, WDDilator, WDElem


def test_reader():
    assert read("(a (1 2) b) ; trailing comment") == ["a", [1, 2], "b"]
    assert show(read("(x (y 3))")) == "(x (y 3))"
    for bad in ["", "(a", "a)", "(a) (b)", ")"]:
        with pytest.raises(ParseError):
            read(bad)


def test_posets():
    p = parse_poset("(poset (0 1 2) ((0 1) (1 2)))")
    assert p == chain(3)
    assert parse_poset("(poset (3 7) ())") == FinPoset.from_pairs([3, 7], [])
    assert parse_poset(repr(antichain(2))) == antichain(2)
    for bad in ["(poset (0 1) ((0 1) (1 0)))", "(poset (0 0) ())", "(poset (0) ((0 5)))",
                "(poset (-1) ())", "(poset (0))"]:
        with pytest.raises(ParseError):
            parse_poset(bad)


def test_dilators():
    W = parse_dilator("(one-plus (prod (const (poset (0 1) ((0 1)))) id))")
    assert W == ExprDilator(C.w_z(chain(2)))
    D = parse_dilator("(sum-lex (const-l 1) id-l)")
    assert D.flavor == "LO" and D == ExprDilator(C.SumLex(C.ConstL(1), C.Id()), "LO")
    assert parse_dilator("(wd (sum-lex (const-l 1) id))") == WDDilator(D)
    assert parse_dilator("(as-lo (higman id))").flavor == "LO"
    for bad in ["(sum id)", "(frob id)", "(sum (const-l 1) (higman id))", "(higman (wd id))",
                "(one-plus (as-lo id))", "(higman id-l)", "(const-l x)"]:
        with pytest.raises(ParseError):
            parse_dilator(bad)


EXPRS = st.recursive(
    st.sampled_from([C.Id(), C.Const(chain(2)), C.Const(antichain(2))]),
    lambda kids: st.one_of(st.builds(C.Sum, kids, kids), st.builds(C.Prod, kids, kids),
                           st.builds(C.Higman, kids), st.builds(C.OnePlus, kids)),
    max_leaves=5)
LO_EXPRS = st.recursive(
    st.sampled_from([C.Id(), C.ConstL(1), C.ConstL(3)]),
    lambda kids: st.one_of(st.builds(C.SumLex, kids, kids), st.builds(C.ProdLex, kids, kids)),
    max_leaves=5)


@given(EXPRS)
def test_po_dilator_round_trip(expr):
    W = ExprDilator(expr)
    assert parse_dilator(dilator_to_sexpr(W)) == W


@given(LO_EXPRS, st.booleans())
def test_lo_dilator_round_trip(expr, wrap):
    W = ExprDilator(expr, "LO")
    if wrap:
        W = WDDilator(W)
    assert parse_dilator(dilator_to_sexpr(W)) == W


def test_elements_and_small_forms():
    assert parse_elem("(seq (leaf 0) (leaf 1))") == C.Seq((C.Leaf(0), C.Leaf(1)))
    assert parse_elem("(lift (pair (const 1) (leaf 0)))") == C.Lift(C.Pair(C.CElem(1), C.Leaf(0)))
    assert parse_elem("zero") == C.Zero()
    assert parse_elem("(wd (emb 1 0) (inr (leaf 0)))") == WDElem((1, 0), C.Inr(C.Leaf(0)))
    assert parse_emb("(emb 2 0)") == (2, 0)
    assert parse_cnf("(cnf 2 1 1)") == Cnf((2, 1, 1))
    with pytest.raises(ParseError):
        parse_cnf("(cnf 1 2)")
    with pytest.raises(ParseError):
        parse_elem("(pair (leaf 0))")


@pytest.mark.parametrize("expr", [C.w_z(chain(2)), C.w_a(antichain(2)), C.OnePlus(C.Higman(C.Id()))],
                         ids=repr)
def test_tw_terms_round_trip(expr):
    W = ExprDilator(expr)
    for s in W.elements(chain(2), 3):
        assert parse_elem(C.to_sexpr(s)) == s
    U = TWUniverse(W)
    for t in U.enumerate(6):
        assert parse_tw_term(t.sexpr, U) is t


def test_theta_terms_round_trip():
    S = ThetaSystem(ExprDilator(C.one_plus_two_x_squared()))
    for t in S.enumerate(10):
        assert parse_theta_term(t.sexpr, S) is t
