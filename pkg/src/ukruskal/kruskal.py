"""The Kruskal fixed point ``𝒯W`` of a normal PO-dilator.

Terms are ``∘(a, σ)`` with ``a`` a finite set of terms and ``σ ∈ W(|a|)``
of full support.  ``s = ∘(a,σ) <= t = ∘(b,τ)`` holds when ``s`` lies below
some element of ``b``, or when ``σ`` and ``τ`` compare in ``W(|a ∪ b|)``
after transport along the inclusions.  Both clauses only ask about pairs of
strictly smaller total length, so the recursion terminates.
"""

from dataclasses import dataclass
from functools import lru_cache
from .combinators import Lift, Pair, CElem, Zero, higman_leq
from .dilator import ExtElem, TraceError, ext_compare, ext_map, suborder_by
from .finposet import FinPoset, canonicalize, fin_leq_by


class UniverseError(ValueError):
    """Terms from different universes were mixed."""


class BoundError(ValueError):
    """An enumeration grew past its term cap."""


class TWTerm:
    """A term ``∘(a, σ)``; construct through :meth:`TWUniverse.build`."""

    __slots__ = ("children", "payload", "base", "owner", "sexpr", "code",
                 "size", "height", "length", "_hash")

    def __init__(self, owner, children, payload, base):
        self.owner = owner
        self.children = tuple(sorted(children))
        self.payload = payload
        self.base = base
        W = owner.W
        self.sexpr = ("(node (" + " ".join(c.sexpr for c in self.children) + ") "
                      + W.sexpr(payload) + ")")
        self.code = int.from_bytes(self.sexpr.encode(), "big")
        self.size = W.size(payload) + sum(c.size for c in self.children)
        self.height = max([0] + [c.height + 1 for c in self.children])
        self.length = max(self.code, 1 + sum(2 * c.length for c in self.children))
        self._hash = hash(self.sexpr)

    def __eq__(self, other):
        return self is other or (isinstance(other, TWTerm) and self.sexpr == other.sexpr)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.code < other.code

    def __repr__(self):
        return self.sexpr


@dataclass(frozen=True)
class FixedPoint:
    """Target of the initiality map: an order and a map ``κ: Ŵ(X) -> X``."""

    leq: object
    kappa: object


class TWUniverse:
    """Terms of ``𝒯W`` together with a memoized comparison."""

    def __init__(self, W):
        if W.flavor != "PO":
            raise ValueError("the Kruskal fixed point needs a PO-dilator")
        self.W = W
        self._memo = {}
        self._interned = {}

    # construction ----------------------------------------------------------

    def build(self, children, payload):
        children = frozenset(children)
        for c in children:
            if c.owner is not self:
                raise UniverseError("child term belongs to another universe")
        base = canonicalize(suborder_by(children, self.leq))
        if not self.W.is_element(base.canon, payload):
            raise TraceError(f"{self.W.sexpr(payload)} is not an element over |a|")
        if self.W.support(payload) != frozenset(base.canon.elems):
            raise TraceError(f"{self.W.sexpr(payload)} does not have full support")
        t = TWTerm(self, children, payload, base)
        return self._interned.setdefault(t, t)

    def kappa(self, x):
        """``κ((a,σ)) = ∘(a,σ)``."""
        return self.build(x.support, x.elem)

    @staticmethod
    def kappa_inv(t):
        return ExtElem(frozenset(t.children), t.payload)

    # order -----------------------------------------------------------------

    def leq(self, s, t):
        if s.owner is not self or t.owner is not self:
            raise UniverseError("terms belong to another universe")
        if s is t:
            return True
        key = (s, t)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._leq(s, t)
            self._memo[key] = hit
        return hit

    def _leq(self, s, t):
        if any(self.leq(s, c) for c in t.children):
            return True
        union = canonicalize(suborder_by(set(s.children) | set(t.children), self.leq))
        labels = union.labels()
        W = self.W
        lo = W.fmap(lambda i: labels[s.base.en[i]], s.payload)
        hi = W.fmap(lambda i: labels[t.base.en[i]], t.payload)
        return W.leq_by(union.canon.le, lo, hi)

    def lt(self, s, t):
        return s != t and self.leq(s, t)

    # enumeration -----------------------------------------------------------

    def enumerate(self, bound, cap=None):
        """All terms of size ``<= bound``, sorted by ``(size, code)``.

        Child sets of cardinality ``c`` are only formed when
        ``W.trace_feasible(c, p)``; for the dilators in this package whether
        a trace element exists depends on ``|a|`` alone, not on its order.
        Raises :class:`BoundError` once more than ``cap`` terms exist.
        """
        W = self.W
        terms = []

        @lru_cache(maxsize=None)
        def cards(p):
            # supports are sets of atoms, so at most p of them
            return frozenset(c for c in range(p + 1) if W.trace_feasible(c, p))

        for k in range(1, bound + 1):
            level = []
            for p in range(1, k + 1):
                for subset in _subsets_with_sum(terms, k - p, cards(p)):
                    base = canonicalize(suborder_by(subset, self.leq))
                    for sigma in W.trace_of_size(base.canon, p):
                        level.append(self.build(subset, sigma))
                        if cap is not None and len(terms) + len(level) > cap:
                            raise BoundError(f"more than {cap} terms up to size {k}")
            level.sort(key=lambda t: t.code)
            terms.extend(level)
        return terms

    def check_fixed_point(self, terms):
        """Violations of ``κx <= κy ⇔ x <=_Ŵ y or κx <=fin supp y`` over ``terms``."""
        return fixed_point_violations(self.W, FixedPoint(self.leq, self.kappa),
                                      [self.kappa_inv(t) for t in terms])

    def initial_map(self, target):
        """The unique ``f`` with ``f ∘ κ = κ' ∘ Ŵ(f)``, as a memoized function."""
        memo = {}

        def f(t):
            if t not in memo:
                for c in t.children:
                    f(c)
                x = ext_map(self.W, f, self.leq, target.leq, self.kappa_inv(t))
                memo[t] = target.kappa(x)
            return memo[t]

        return f

    # export ----------------------------------------------------------------

    def hasse_dot(self, terms, name="TW"):
        return hasse_dot(terms, self.leq, name)


def _subsets_with_sum(terms, total, cards):
    """Subsets of ``terms`` with sizes summing to ``total`` and cardinality in ``cards``."""
    if not cards:
        return []
    top = max(cards)
    pool = [t for t in terms if t.size <= total]
    out = []

    def rec(start, remaining, chosen):
        if remaining == 0:
            if len(chosen) in cards:
                out.append(tuple(chosen))
            return
        if len(chosen) == top:
            return
        for i in range(start, len(pool)):
            t = pool[i]
            if t.size <= remaining:
                chosen.append(t)
                rec(i + 1, remaining - t.size, chosen)
                chosen.pop()

    rec(0, total, [])
    return out


def fixed_point_violations(W, fp, exts):
    """Pairs where the fixed-point biconditional fails, for a target ``fp``."""
    bad = []
    images = [fp.kappa(x) for x in exts]
    for x, kx in zip(exts, images):
        for y, ky in zip(exts, images):
            lhs = bool(fp.leq(kx, ky))
            rhs = ext_compare(W, fp.leq, x, y) or fin_leq_by([kx], y.support, fp.leq)
            if lhs != rhs:
                bad.append((x, y))
    return bad


def seq_fixed_point(Z):
    """Finite sequences over ``Z`` with Higman's order, as a fixed point of ``1 + Z x X``.

    ``κ(0) = ⟨⟩`` and ``κ((z, s)) = ⟨z⟩ + s``.
    """

    def leq(s, t):
        return higman_leq(Z.le, s, t)

    def kappa(x):
        ca = canonicalize(FinPoset(x.support, leq))
        match x.elem:
            case Zero():
                return ()
            case Lift(Pair(CElem(z), leaf)):
                return (z,) + ca.en[leaf.x]
        raise TraceError(f"not an element of 1 + Z x X: {x.elem!r}")

    return FixedPoint(leq, kappa)


def hasse_dot(elems, leq, name="order"):
    """DOT text of the cover relation of a finite order."""
    import networkx as nx

    G = nx.DiGraph()
    G.add_nodes_from(range(len(elems)))
    G.add_edges_from((i, j) for i, s in enumerate(elems) for j, t in enumerate(elems)
                     if i != j and leq(s, t))
    H = nx.transitive_reduction(G)
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, s in enumerate(elems):
        label = str(s).replace('"', '\\"')
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in sorted(H.edges()):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines)


def subterms(t):
    yield t
    for c in t.children:
        yield from subterms(c)
