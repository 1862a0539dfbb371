"""Dilator expressions and their element terms.

PO combinators: ``Const(P)``, ``Id()``, ``Sum``, ``Prod``, ``Higman``,
``OnePlus``.  LO combinators: ``ConstL(n)``, ``Id()``, ``SumLex``,
``ProdLex``.  Elements of ``W(a)`` are structural terms whose leaves are
elements of ``a``; every operation below dispatches on the expression.

Orders:

* ``Sum`` keeps the two sides incomparable; ``SumLex`` puts the left side
  below the right side.
* ``Prod`` is componentwise; ``ProdLex`` compares the left component first.
* ``Higman`` orders finite sequences by embeddings: there is a strictly
  increasing ``h`` with ``s[i] <= t[h(i)]``.
* ``OnePlus`` adds a point ``Zero`` comparable only with itself.

The size of an element is its number of atoms (leaves, constants,
``Zero`` and empty sequences); wrappers and pairs are free.
"""

from dataclasses import dataclass
from functools import lru_cache

from .finposet import FinPoset


class ShapeError(ValueError):
    """Element term does not belong to the given expression or order."""


class SupportError(ValueError):
    """A leaf lies outside the range of the map being inverted."""


# -- expressions ----------------------------------------------------------------

@dataclass(frozen=True)
class Const:
    poset: FinPoset


@dataclass(frozen=True)
class Id:
    pass


@dataclass(frozen=True)
class Sum:
    left: object
    right: object


@dataclass(frozen=True)
class Prod:
    left: object
    right: object


@dataclass(frozen=True)
class Higman:
    inner: object


@dataclass(frozen=True)
class OnePlus:
    inner: object


@dataclass(frozen=True)
class ConstL:
    n: int


@dataclass(frozen=True)
class SumLex:
    left: object
    right: object


@dataclass(frozen=True)
class ProdLex:
    left: object
    right: object


PO_NODES = (Const, Sum, Prod, Higman, OnePlus)
LO_NODES = (ConstL, SumLex, ProdLex)


def flavor_of(expr):
    """``None`` for a flavor-neutral expression, otherwise ``"PO"`` or ``"LO"``."""
    kinds = set()

    def walk(e):
        if isinstance(e, PO_NODES):
            kinds.add("PO")
        elif isinstance(e, LO_NODES):
            kinds.add("LO")
        elif not isinstance(e, Id):
            raise ShapeError(f"unknown expression node {e!r}")
        for child in _subexprs(e):
            walk(child)

    walk(expr)
    if len(kinds) > 1:
        raise ShapeError("expression mixes PO and LO combinators")
    return kinds.pop() if kinds else None


def _subexprs(e):
    if isinstance(e, (Sum, Prod, SumLex, ProdLex)):
        return (e.left, e.right)
    if isinstance(e, (Higman, OnePlus)):
        return (e.inner,)
    return ()


# -- element terms --------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class CElem:
    value: object


@dataclass(frozen=True, slots=True)
class Leaf:
    x: object


@dataclass(frozen=True, slots=True)
class Inl:
    e: object


@dataclass(frozen=True, slots=True)
class Inr:
    e: object


@dataclass(frozen=True, slots=True)
class Pair:
    left: object
    right: object


@dataclass(frozen=True, slots=True)
class Seq:
    items: tuple = ()


@dataclass(frozen=True, slots=True)
class Zero:
    pass


@dataclass(frozen=True, slots=True)
class Lift:
    e: object


def leaves(s):
    """Leaf values of an element term, left to right."""
    match s:
        case Leaf(x):
            yield x
        case Inl(e) | Inr(e) | Lift(e):
            yield from leaves(e)
        case Pair(l, r):
            yield from leaves(l)
            yield from leaves(r)
        case Seq(items):
            for e in items:
                yield from leaves(e)


def relabel(s, f):
    """Replace every leaf ``x`` by ``f(x)``."""
    match s:
        case Leaf(x):
            return Leaf(f(x))
        case Inl(e):
            return Inl(relabel(e, f))
        case Inr(e):
            return Inr(relabel(e, f))
        case Lift(e):
            return Lift(relabel(e, f))
        case Pair(l, r):
            return Pair(relabel(l, f), relabel(r, f))
        case Seq(items):
            return Seq(tuple(relabel(e, f) for e in items))
        case _:
            return s


def size(s):
    match s:
        case Leaf() | CElem() | Zero():
            return 1
        case Inl(e) | Inr(e) | Lift(e):
            return size(e)
        case Pair(l, r):
            return size(l) + size(r)
        case Seq(items):
            return sum(size(e) for e in items) if items else 1
    raise ShapeError(f"not an element term: {s!r}")


def to_sexpr(s):
    match s:
        case Leaf(x):
            return f"(leaf {x})"
        case CElem(v):
            return f"(const {v})"
        case Zero():
            return "zero"
        case Inl(e):
            return f"(inl {to_sexpr(e)})"
        case Inr(e):
            return f"(inr {to_sexpr(e)})"
        case Lift(e):
            return f"(lift {to_sexpr(e)})"
        case Pair(l, r):
            return f"(pair {to_sexpr(l)} {to_sexpr(r)})"
        case Seq(items):
            return "(seq" + "".join(" " + to_sexpr(e) for e in items) + ")"
    return repr(s)


# -- semantics ------------------------------------------------------------------

def elem_leq(expr, le, s, t):
    """Decide ``s <= t`` in ``W(X)``; ``le`` compares leaves in ``X``."""
    match expr:
        case Id():
            if not (isinstance(s, Leaf) and isinstance(t, Leaf)):
                raise ShapeError("id expects leaves")
            return s.x == t.x or bool(le(s.x, t.x))
        case Const(P):
            return P.le(s.value, t.value)
        case ConstL():
            return s.value <= t.value
        case Sum(l, r):
            if isinstance(s, Inl) and isinstance(t, Inl):
                return elem_leq(l, le, s.e, t.e)
            if isinstance(s, Inr) and isinstance(t, Inr):
                return elem_leq(r, le, s.e, t.e)
            return False
        case SumLex(l, r):
            if isinstance(s, Inl):
                return elem_leq(l, le, s.e, t.e) if isinstance(t, Inl) else True
            return isinstance(t, Inr) and elem_leq(r, le, s.e, t.e)
        case Prod(l, r):
            return elem_leq(l, le, s.left, t.left) and elem_leq(r, le, s.right, t.right)
        case ProdLex(l, r):
            if s.left == t.left:
                return elem_leq(r, le, s.right, t.right)
            return elem_leq(l, le, s.left, t.left)
        case OnePlus(inner):
            if isinstance(s, Zero) or isinstance(t, Zero):
                return isinstance(s, Zero) and isinstance(t, Zero)
            return elem_leq(inner, le, s.e, t.e)
        case Higman(inner):
            return higman_leq(lambda x, y: elem_leq(inner, le, x, y), s.items, t.items)
    raise ShapeError(f"unknown expression {expr!r}")


def higman_leq(le, xs, ys):
    """Greedy test for a strictly increasing ``h`` with ``xs[i] <= ys[h(i)]``.

    Taking the least admissible position at every step is optimal, so this
    agrees with searching all increasing maps in lexicographic order.
    """
    j = 0
    n = len(ys)
    for x in xs:
        while j < n and not le(x, ys[j]):
            j += 1
        if j == n:
            return False
        j += 1
    return True


def elem_support(s):
    out = set()
    _collect(s, out)
    return frozenset(out)


def _collect(s, out):
    t = type(s)
    if t is Leaf:
        out.add(s.x)
    elif t is Inl or t is Inr or t is Lift:
        _collect(s.e, out)
    elif t is Pair:
        _collect(s.left, out)
        _collect(s.right, out)
    elif t is Seq:
        for e in s.items:
            _collect(e, out)


def elem_map(f, s):
    """Push ``s`` along the map ``f`` (a QuasiMap, dict or callable) on leaves."""
    if isinstance(f, dict):
        return relabel(s, f.__getitem__)
    return relabel(s, f)


def elem_unmap(f, t):
    """The unique ``s`` with ``elem_map(f, s) == t``; ``f`` must be injective."""
    if isinstance(f, dict):
        pairs = f.items()
    else:
        pairs = zip(f.dom.elems, f.images)
    inverse = {}
    for x, y in pairs:
        if y in inverse:
            raise SupportError("map is not injective")
        inverse[y] = x

    def back(y):
        try:
            return inverse[y]
        except KeyError:
            raise SupportError(f"leaf {y!r} is outside the range of the map") from None

    return relabel(t, back)


def is_element(expr, a, s):
    """Membership of ``s`` in ``W(a)``."""
    match expr:
        case Id():
            return isinstance(s, Leaf) and s.x in a
        case Const(P):
            return isinstance(s, CElem) and s.value in P
        case ConstL(n):
            return isinstance(s, CElem) and isinstance(s.value, int) and 0 <= s.value < n
        case Sum(l, r) | SumLex(l, r):
            if isinstance(s, Inl):
                return is_element(l, a, s.e)
            return isinstance(s, Inr) and is_element(r, a, s.e)
        case Prod(l, r) | ProdLex(l, r):
            return isinstance(s, Pair) and is_element(l, a, s.left) and is_element(r, a, s.right)
        case OnePlus(inner):
            return isinstance(s, Zero) or (isinstance(s, Lift) and is_element(inner, a, s.e))
        case Higman(inner):
            return isinstance(s, Seq) and all(is_element(inner, a, e) for e in s.items)
    return False


@lru_cache(maxsize=None)
def elements_of_size(expr, a, k):
    """All elements of ``W(a)`` with exactly ``k`` atoms, in a fixed order."""
    if k <= 0:
        return ()
    match expr:
        case Id():
            return tuple(Leaf(x) for x in a.elems) if k == 1 else ()
        case Const(P):
            return tuple(CElem(p) for p in P.elems) if k == 1 else ()
        case ConstL(n):
            return tuple(CElem(i) for i in range(n)) if k == 1 else ()
        case Sum(l, r) | SumLex(l, r):
            return (tuple(Inl(e) for e in elements_of_size(l, a, k))
                    + tuple(Inr(e) for e in elements_of_size(r, a, k)))
        case Prod(l, r) | ProdLex(l, r):
            return tuple(Pair(x, y) for i in range(1, k)
                         for x in elements_of_size(l, a, i)
                         for y in elements_of_size(r, a, k - i))
        case OnePlus(inner):
            lifted = tuple(Lift(e) for e in elements_of_size(inner, a, k))
            return ((Zero(),) + lifted) if k == 1 else lifted
        case Higman(inner):
            seqs = tuple(Seq(items) for items in _sequences(inner, a, k) if items)
            return ((Seq(()),) + seqs) if k == 1 else seqs
    raise ShapeError(f"unknown expression {expr!r}")


@lru_cache(maxsize=None)
def _sequences(inner, a, k):
    # tuples of inner elements whose sizes add up to exactly k
    if k == 0:
        return ((),)
    out = []
    for i in range(1, k + 1):
        for head in elements_of_size(inner, a, i):
            for tail in _sequences(inner, a, k - i):
                out.append((head,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def leaf_counts(expr, k):
    """Possible numbers of leaf occurrences in an element of size exactly ``k``."""
    if k <= 0:
        return frozenset()
    match expr:
        case Id():
            return frozenset({1}) if k == 1 else frozenset()
        case Const(P):
            return frozenset({0}) if k == 1 and len(P) else frozenset()
        case ConstL(n):
            return frozenset({0}) if k == 1 and n else frozenset()
        case Sum(l, r) | SumLex(l, r):
            return leaf_counts(l, k) | leaf_counts(r, k)
        case Prod(l, r) | ProdLex(l, r):
            return frozenset(x + y for i in range(1, k)
                             for x in leaf_counts(l, i) for y in leaf_counts(r, k - i))
        case OnePlus(inner):
            return leaf_counts(inner, k) | (frozenset({0}) if k == 1 else frozenset())
        case Higman(inner):
            return _seq_leaf_counts(inner, k) | (frozenset({0}) if k == 1 else frozenset())
    raise ShapeError(f"unknown expression {expr!r}")


@lru_cache(maxsize=None)
def _seq_leaf_counts(inner, k):
    # non-empty sequences of total size k
    out = set(leaf_counts(inner, k))
    for i in range(1, k):
        out |= {x + y for x in leaf_counts(inner, i) for y in _seq_leaf_counts(inner, k - i)}
    return frozenset(out)


def trace_feasible(expr, c, p):
    """Whether some element of size ``p`` over a ``c``-element order has full support.

    Leaves can be chosen freely, so ``c`` distinct values fit into any
    element with at least ``c`` leaf occurrences (and ``c = 0`` needs none).
    """
    counts = leaf_counts(expr, p)
    return 0 in counts if c == 0 else any(n >= c for n in counts)


def elements(expr, a, bound):
    """All elements of ``W(a)`` of size at most ``bound``, duplicate free."""
    return [e for k in range(1, bound + 1) for e in elements_of_size(expr, a, k)]


# -- standard instances -----------------------------------------------------------

def w_z(Z):
    """``X -> 1 + Z x X``, whose Kruskal fixed point is Higman's order on ``Seq(Z)``."""
    return OnePlus(Prod(Const(Z), Id()))


def w_a(A):
    """``X -> A x X^{<omega}``: finite structured trees labelled in ``A``."""
    return Prod(Const(A), Higman(Id()))


def one_plus_two_x_squared():
    """``X -> 1 + 2 x X^2`` with left-significant lexicographic products."""
    return SumLex(ConstL(1), ProdLex(ConstL(2), ProdLex(Id(), Id())))
