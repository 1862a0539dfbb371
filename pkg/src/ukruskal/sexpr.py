"""S-expression syntax for posets, dilators, element terms and fixed-point terms.

Grammar (``;`` starts a comment running to the end of the line)::

    poset   := (poset (x ...) ((x y) ...))        pairs are closed transitively
    dilator := id | id-l | (const poset) | (const-l n)
             | (sum d d) | (prod d d) | (higman d) | (one-plus d)
             | (sum-lex d d) | (prod-lex d d) | (wd d) | (as-lo d) | (as-po d)
    elem    := (leaf x) | (const p) | (inl e) | (inr e) | (pair e e)
             | (seq e ...) | zero | (lift e) | (wd (emb x ...) e)
    tw      := (node (tw ...) elem)
    theta   := (theta (theta ...) elem)
    cnf     := (cnf n ...)
    emb     := (emb x ...)

``id-l`` is ``id`` marked as a linear-order dilator.  ``(wd d)``, ``(as-lo d)``
and ``(as-po d)`` are only allowed at the top level; the last two assert a
flavor without checking it, which is how a file describes a dilator whose
claimed laws should fail validation.  Leaves inside ``node``/``theta`` payloads are
labels of the canonical form of the children.
"""

import re

from . import combinators as C
from .dilator import ExprDilator
from .finposet import FinPoset, PosetError
from .wd import Cnf, WDDilator, WDElem


class ParseError(ValueError):
    """Malformed or ill-typed S-expression."""


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def read(text):
    """Parse text holding exactly one S-expression into nested lists."""
    text = re.sub(r";[^\n]*", "", text)
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise ParseError("empty input")
    pos = 0

    def node():
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of input")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            out = []
            while pos < len(tokens) and tokens[pos] != ")":
                out.append(node())
            if pos >= len(tokens):
                raise ParseError("missing ')'")
            pos += 1
            return out
        if tok == ")":
            raise ParseError("unexpected ')'")
        return int(tok) if re.fullmatch(r"-?\d+", tok) else tok

    tree = node()
    if pos != len(tokens):
        raise ParseError(f"trailing input after expression: {' '.join(map(str, tokens[pos:pos + 5]))}")
    return tree


def _expect(node, head, arity=None):
    if not (isinstance(node, list) and node and node[0] == head):
        raise ParseError(f"expected ({head} ...), got {show(node)}")
    if arity is not None and len(node) - 1 != arity:
        raise ParseError(f"({head} ...) takes {arity} argument(s), got {len(node) - 1}")
    return node[1:]


def _nat(x):
    if not isinstance(x, int) or x < 0:
        raise ParseError(f"expected a natural number, got {show(x)}")
    return x


def show(node):
    if isinstance(node, list):
        return "(" + " ".join(show(x) for x in node) + ")"
    return str(node)


# -- posets -------------------------------------------------------------------------

def poset_from(node):
    elems, pairs = _expect(node, "poset", 2)
    if not isinstance(elems, list) or not isinstance(pairs, list):
        raise ParseError("poset needs an element list and a pair list")
    elems = [_nat(x) for x in elems]
    if len(set(elems)) != len(elems):
        raise ParseError("poset elements must be distinct")
    rel = []
    for p in pairs:
        if not (isinstance(p, list) and len(p) == 2):
            raise ParseError(f"bad pair {show(p)}")
        rel.append((_nat(p[0]), _nat(p[1])))
    try:
        return FinPoset.from_pairs(elems, rel)
    except PosetError as err:
        raise ParseError(str(err)) from None


def parse_poset(text):
    return poset_from(read(text))


# -- dilators -----------------------------------------------------------------------

_BINARY = {"sum": C.Sum, "prod": C.Prod, "sum-lex": C.SumLex, "prod-lex": C.ProdLex}
_UNARY = {"higman": C.Higman, "one-plus": C.OnePlus}


def expr_from(node):
    """``(expr, forced_lo)``; ``forced_lo`` is set by any ``id-l``."""
    if node == "id":
        return C.Id(), False
    if node == "id-l":
        return C.Id(), True
    if not (isinstance(node, list) and node and isinstance(node[0], str)):
        raise ParseError(f"not a dilator expression: {show(node)}")
    head = node[0]
    if head == "const":
        (p,) = _expect(node, "const", 1)
        return C.Const(poset_from(p)), False
    if head == "const-l":
        (n,) = _expect(node, "const-l", 1)
        return C.ConstL(_nat(n)), False
    if head in _BINARY:
        l, r = _expect(node, head, 2)
        (le, fl), (re_, fr) = expr_from(l), expr_from(r)
        return _BINARY[head](le, re_), fl or fr
    if head in _UNARY:
        (e,) = _expect(node, head, 1)
        inner, forced = expr_from(e)
        return _UNARY[head](inner), forced
    if head in ("wd", "as-lo", "as-po"):
        raise ParseError(f"({head} ...) is only allowed at the top level")
    raise ParseError(f"unknown dilator combinator {head!r}")


def dilator_from(node):
    try:
        if isinstance(node, list) and node and node[0] == "wd":
            (inner,) = _expect(node, "wd", 1)
            expr, _ = expr_from(inner)
            return WDDilator(ExprDilator(expr, "LO"))
        if isinstance(node, list) and node and node[0] in ("as-lo", "as-po"):
            (inner,) = _expect(node, node[0], 1)
            expr, _ = expr_from(inner)
            return ExprDilator(expr, node[0][3:].upper(), asserted=True)
        expr, forced = expr_from(node)
        return ExprDilator(expr, "LO" if forced else None)
    except C.ShapeError as err:
        raise ParseError(str(err)) from None


def parse_dilator(text):
    return dilator_from(read(text))


def expr_to_sexpr(expr, id_name="id"):
    match expr:
        case C.Id():
            return id_name
        case C.Const(P):
            return f"(const {P!r})"
        case C.ConstL(n):
            return f"(const-l {n})"
        case C.Higman(e):
            return f"(higman {expr_to_sexpr(e, id_name)})"
        case C.OnePlus(e):
            return f"(one-plus {expr_to_sexpr(e, id_name)})"
    for name, cls in _BINARY.items():
        if isinstance(expr, cls):
            l, r = expr_to_sexpr(expr.left, id_name), expr_to_sexpr(expr.right, id_name)
            return f"({name} {l} {r})"
    raise ParseError(f"unknown expression {expr!r}")


def dilator_to_sexpr(W):
    if isinstance(W, WDDilator):
        return f"(wd {dilator_to_sexpr(W.D)})"
    inferred = C.flavor_of(W.expr)
    if inferred is not None and inferred != W.flavor:
        return f"(as-{W.flavor.lower()} {expr_to_sexpr(W.expr)})"
    neutral = inferred is None
    return expr_to_sexpr(W.expr, "id-l" if W.flavor == "LO" and neutral else "id")


# -- element terms ------------------------------------------------------------------

def elem_from(node):
    if node == "zero":
        return C.Zero()
    if not (isinstance(node, list) and node and isinstance(node[0], str)):
        raise ParseError(f"not an element term: {show(node)}")
    head, args = node[0], node[1:]
    if head == "leaf":
        (x,) = _expect(node, "leaf", 1)
        return C.Leaf(x)
    if head == "const":
        (v,) = _expect(node, "const", 1)
        return C.CElem(v)
    if head in ("inl", "inr", "lift"):
        (e,) = _expect(node, head, 1)
        return {"inl": C.Inl, "inr": C.Inr, "lift": C.Lift}[head](elem_from(e))
    if head == "pair":
        l, r = _expect(node, "pair", 2)
        return C.Pair(elem_from(l), elem_from(r))
    if head == "seq":
        return C.Seq(tuple(elem_from(e) for e in args))
    if head == "wd":
        emb, e = _expect(node, "wd", 2)
        return WDElem(emb_from(emb), elem_from(e))
    raise ParseError(f"unknown element constructor {head!r}")


def parse_elem(text):
    return elem_from(read(text))


def emb_from(node):
    return tuple(_expect(node, "emb"))


def parse_emb(text):
    return emb_from(read(text))


def cnf_from(node):
    try:
        return Cnf(tuple(_nat(x) for x in _expect(node, "cnf")))
    except ValueError as err:
        raise ParseError(str(err)) from None


def parse_cnf(text):
    return cnf_from(read(text))


# -- fixed-point terms --------------------------------------------------------------

def tw_term_from(node, universe):
    children, payload = _expect(node, "node", 2)
    if not isinstance(children, list):
        raise ParseError("node needs a child list")
    kids = [tw_term_from(c, universe) for c in children]
    return universe.build(kids, elem_from(payload))


def parse_tw_term(text, universe):
    return tw_term_from(read(text), universe)


def theta_term_from(node, system):
    args, payload = _expect(node, "theta", 2)
    if not isinstance(args, list):
        raise ParseError("theta needs an argument list")
    return system.build([theta_term_from(a, system) for a in args], elem_from(payload))


def parse_theta_term(text, system):
    return theta_term_from(read(text), system)
