"""The linear order ``ϑ(D)`` of an LO-dilator ``D``.

``ϑ^a_σ < ϑ^b_τ`` iff either ``D(|ι_a|)σ < D(|ι_b|)τ`` in ``D(|a ∪ b|)``
and every ``s' ∈ a`` is below ``ϑ^b_τ``, or ``ϑ^a_σ <= t'`` for some
``t' ∈ b``.  Equality is identity of terms.
"""

from functools import cmp_to_key, lru_cache
from operator import le as int_le

from .dilator import TraceError
from .finposet import chain
from .kruskal import BoundError, _subsets_with_sum


class OrderError(ValueError):
    """Two terms turned out incomparable, or came from different systems."""


class ThetaTerm:
    """``ϑ^a_σ``; ``args`` is ``a`` in increasing order, payload labels index it."""

    __slots__ = ("args", "payload", "owner", "sexpr", "code", "size", "length", "_hash")

    def __init__(self, owner, args, payload):
        self.owner = owner
        self.args = tuple(args)
        self.payload = payload
        D = owner.D
        listed = sorted(self.args, key=lambda s: s.code)
        self.sexpr = ("(theta (" + " ".join(s.sexpr for s in listed) + ") "
                      + D.sexpr(payload) + ")")
        self.code = int.from_bytes(self.sexpr.encode(), "big")
        self.size = D.size(payload) + sum(s.size for s in self.args)
        self.length = max(self.code, 1 + sum(2 * s.length for s in self.args))
        self._hash = hash(self.sexpr)

    def __eq__(self, other):
        return self is other or (isinstance(other, ThetaTerm) and self.sexpr == other.sexpr)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        # storage order only; the notation order is ThetaSystem.lt
        return self.code < other.code

    def __repr__(self):
        return self.sexpr

    @property
    def children(self):
        return self.args


class ThetaSystem:
    """Terms of ``ϑ(D)`` with a memoized strict comparison."""

    def __init__(self, D):
        if D.flavor != "LO":
            raise ValueError("ϑ(D) needs an LO-dilator")
        self.D = D
        self._memo = {}
        self._interned = {}
        self._key = cmp_to_key(self.compare)

    def build(self, args, payload):
        args = set(args)
        for s in args:
            if s.owner is not self:
                raise OrderError("argument belongs to another system")
        ordered = sorted(args, key=self._key)
        base = chain(len(ordered))
        if not self.D.is_element(base, payload):
            raise TraceError(f"{self.D.sexpr(payload)} is not an element of D({len(ordered)})")
        if self.D.support(payload) != frozenset(base.elems):
            raise TraceError(f"{self.D.sexpr(payload)} does not have full support")
        t = ThetaTerm(self, ordered, payload)
        return self._interned.setdefault(t, t)

    def lt(self, s, t):
        if s.owner is not self or t.owner is not self:
            raise OrderError("terms belong to another system")
        if s is t:
            return False
        key = (s, t)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._lt(s, t)
            self._memo[key] = hit
        return hit

    def le(self, s, t):
        return s == t or self.lt(s, t)

    def _lt(self, s, t):
        if any(self.le(s, u) for u in t.args):
            return True
        if not all(self.lt(u, t) for u in s.args):
            return False
        union = sorted(set(s.args) | set(t.args), key=self._key)
        pos = {u: i for i, u in enumerate(union)}
        D = self.D
        lo = D.fmap(lambda i: pos[s.args[i]], s.payload)
        hi = D.fmap(lambda i: pos[t.args[i]], t.payload)
        return lo != hi and D.leq_by(int_le, lo, hi)

    def compare(self, s, t):
        """-1, 0 or 1; raises :class:`OrderError` on incomparable terms."""
        if s == t:
            return 0
        if self.lt(s, t):
            return -1
        if self.lt(t, s):
            return 1
        raise OrderError(f"{s} and {t} are incomparable")

    def enumerate(self, bound, cap=None):
        """All terms of size ``<= bound`` in increasing ``(size, code)`` order.

        Raises :class:`BoundError` once more than ``cap`` terms exist.
        """
        D = self.D

        @lru_cache(maxsize=None)
        def trace(c, p):
            return tuple(D.trace_of_size(chain(c), p))

        @lru_cache(maxsize=None)
        def cards(p):
            return frozenset(c for c in range(p + 1) if D.trace_feasible(c, p))

        terms = []
        for k in range(1, bound + 1):
            level = []
            for p in range(1, k + 1):
                for subset in _subsets_with_sum(terms, k - p, cards(p)):
                    for sigma in trace(len(subset), p):
                        level.append(self.build(subset, sigma))
                        if cap is not None and len(terms) + len(level) > cap:
                            raise BoundError(f"more than {cap} terms up to size {k}")
            level.sort(key=lambda t: t.code)
            terms.extend(level)
        return terms

    def sort(self, terms):
        return sorted(terms, key=self._key)
