"""Finite partial orders, canonical representatives and maps between them.

A :class:`FinPoset` stores its elements in sorted order together with the
full ``<=`` matrix.  Elements may be any mutually comparable hashable values
(naturals in user input, terms inside fixed-point universes).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from . import kernels


class PosetError(ValueError):
    """Input relation is not a partial order."""


class MapError(ValueError):
    """A map is not a (quasi) embedding, or is applied outside its domain."""


class FinPoset:
    """Immutable finite partial order.

    ``FinPoset(elems, le)`` evaluates ``le(x, y)`` on all pairs; use
    :meth:`from_pairs` to give generating pairs instead.
    """

    __slots__ = ("elems", "_rows", "_index", "_key")

    def __init__(self, elems, le=None, *, rows=None, check=True):
        elems = sorted(set(elems))
        self.elems = tuple(elems)
        self._index = {x: i for i, x in enumerate(self.elems)}
        if rows is None:
            if le is None:
                raise TypeError("FinPoset needs either le or rows")
            rows = tuple(tuple(x == y or bool(le(x, y)) for y in elems) for x in elems)
        self._rows = rows
        self._key = (self.elems, rows)
        if check:
            bad = kernels.order_violation(self.matrix())
            if bad is not None:
                axiom, idx = bad
                raise PosetError(f"{axiom} fails at {[self.elems[i] for i in idx]}")

    @classmethod
    def from_pairs(cls, elems, pairs):
        """Reflexive-transitive closure of the given ``(x, y)`` pairs."""
        elems = sorted(set(elems))
        index = {x: i for i, x in enumerate(elems)}
        n = len(elems)
        M = np.eye(n, dtype=bool)
        for x, y in pairs:
            if x not in index or y not in index:
                raise PosetError(f"pair ({x} {y}) mentions an unknown element")
            M[index[x], index[y]] = True
        for k in range(n):
            M |= np.outer(M[:, k], M[k, :])
        rows = tuple(tuple(bool(v) for v in row) for row in M)
        return cls(elems, rows=rows)

    @classmethod
    def _from_rows(cls, elems, rows):
        # rows already aligned with sorted elems and known to be a partial order
        return cls(elems, rows=rows, check=False)

    def le(self, x, y):
        return self._rows[self._index[x]][self._index[y]]

    def lt(self, x, y):
        return x != y and self.le(x, y)

    def index(self, x):
        return self._index[x]

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, x):
        return x in self._index

    def __eq__(self, other):
        return isinstance(other, FinPoset) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        pairs = [(x, y) for x in self.elems for y in self.elems if self.lt(x, y)]
        body = " ".join(f"({x} {y})" for x, y in pairs)
        return f"(poset ({' '.join(map(str, self.elems))}) ({body}))"

    def matrix(self):
        return kernels.as_matrix(self._rows) if self._rows else np.zeros((0, 0), np.uint8)

    def pattern(self):
        """Hashable shape of the order, independent of element names."""
        return self._rows

    def suborder(self, subset):
        subset = sorted(set(subset))
        for x in subset:
            if x not in self._index:
                raise MapError(f"{x!r} is not an element of {self!r}")
        idx = [self._index[x] for x in subset]
        rows = tuple(tuple(self._rows[i][j] for j in idx) for i in idx)
        return FinPoset._from_rows(subset, rows)

    def is_chain(self):
        return all(self._rows[i][j] or self._rows[j][i]
                   for i in range(len(self)) for j in range(i))


def chain(n):
    """The standard chain ``0 < 1 < ... < n-1``."""
    rows = tuple(tuple(i <= j for j in range(n)) for i in range(n))
    return FinPoset._from_rows(range(n), rows)


def antichain(n):
    rows = tuple(tuple(i == j for j in range(n)) for i in range(n))
    return FinPoset._from_rows(range(n), rows)


@dataclass(frozen=True)
class CanonicalForm:
    """Representative ``canon`` on ``{0..n-1}`` with isomorphism ``en: canon -> original``.

    ``en[i]`` is the original element carrying canonical label ``i``.
    """

    canon: FinPoset
    en: tuple

    def label(self, x):
        """Inverse of ``en``."""
        return self.en.index(x)

    def labels(self):
        return {x: i for i, x in enumerate(self.en)}


@lru_cache(maxsize=None)
def _canonical_order(rows):
    n = len(rows)
    if all(rows[i][j] or rows[j][i] for i in range(n) for j in range(i)):
        # chains go to the standard chain via the increasing enumeration
        below = [sum(rows[k][i] for k in range(n)) for i in range(n)]
        return tuple(sorted(range(n), key=below.__getitem__))
    S = kernels.as_matrix([[rows[i][j] and i != j for j in range(n)] for i in range(n)])
    return tuple(kernels.canonical_labeling(S))


@lru_cache(maxsize=None)
def _canon_poset(rows, order):
    n = len(rows)
    new = tuple(tuple(rows[order[i]][order[j]] for j in range(n)) for i in range(n))
    return FinPoset._from_rows(range(n), new)


def canonicalize(p):
    """Canonical representative ``|p|`` and the enumeration ``en_p``."""
    order = _canonical_order(p.pattern())
    canon = _canon_poset(p.pattern(), order)
    return CanonicalForm(canon, tuple(p.elems[i] for i in order))


class QuasiMap:
    """A map between finite posets that reflects the order.

    ``kind`` is ``"quasi"`` (``f(x) <= f(y)`` implies ``x <= y``) or
    ``"embedding"`` (additionally order preserving).
    """

    __slots__ = ("dom", "cod", "images", "kind")

    def __init__(self, dom, cod, table, kind="quasi", check=True):
        if callable(table):
            images = tuple(table(x) for x in dom.elems)
        else:
            images = tuple(table[x] for x in dom.elems)
        self.dom, self.cod, self.images, self.kind = dom, cod, images, kind
        if check:
            for y in images:
                if y not in cod:
                    raise MapError(f"image {y!r} lies outside the codomain")
            if not self.is_quasi():
                raise MapError("map is not a quasi embedding")
            if kind == "embedding" and not self.is_embedding():
                raise MapError("map is not an embedding")

    def __call__(self, x):
        try:
            return self.images[self.dom.index(x)]
        except KeyError:
            raise MapError(f"{x!r} is not in the domain") from None

    def __eq__(self, other):
        return (isinstance(other, QuasiMap) and self.dom == other.dom
                and self.cod == other.cod and self.images == other.images)

    def __hash__(self):
        return hash((self.dom, self.cod, self.images))

    def __repr__(self):
        pairs = ", ".join(f"{x}->{y}" for x, y in zip(self.dom.elems, self.images))
        return f"QuasiMap({pairs})"

    def as_dict(self):
        return dict(zip(self.dom.elems, self.images))

    def image(self):
        return frozenset(self.images)

    def is_quasi(self):
        d, c = self.dom, self.cod
        return all(d.le(x, y) for (x, fx), (y, fy) in product(zip(d.elems, self.images), repeat=2)
                   if c.le(fx, fy))

    def is_embedding(self):
        d, c = self.dom, self.cod
        return all(d.le(x, y) == c.le(fx, fy)
                   for (x, fx), (y, fy) in product(zip(d.elems, self.images), repeat=2))

    def is_surjective(self):
        return self.image() == frozenset(self.cod.elems)

    def compose(self, first):
        """``self o first``."""
        if first.cod != self.dom:
            raise MapError("maps are not composable")
        kind = "embedding" if self.kind == first.kind == "embedding" else "quasi"
        return QuasiMap(first.dom, self.cod, lambda x: self(first(x)), kind, check=False)


def identity(p):
    return QuasiMap(p, p, lambda x: x, "embedding", check=False)


def inclusion(sub, sup):
    """The embedding of a suborder into its ambient order."""
    return QuasiMap(sub, sup, lambda x: x, "embedding")


def barred_map(f, a):
    """Surjective restriction of ``f`` to ``a`` onto its image suborder."""
    a = set(a)
    if not a <= set(f.dom.elems):
        raise MapError("restriction set is not contained in the domain")
    dom = f.dom.suborder(a)
    cod = f.cod.suborder({f(x) for x in a})
    return QuasiMap(dom, cod, f, f.kind, check=False)


def abs_map(f):
    """The map ``|f|`` between canonical forms with ``en_b o |f| = f o en_a``."""
    ca, cb = canonicalize(f.dom), canonicalize(f.cod)
    labels = cb.labels()
    table = {i: labels[f(ca.en[i])] for i in range(len(ca.en))}
    return QuasiMap(ca.canon, cb.canon, table, f.kind, check=False)


def fin_leq(a, b, amb):
    """``a <=fin b``: every element of ``a`` lies below some element of ``b``."""
    for x in list(a) + list(b):
        if x not in amb:
            raise MapError(f"{x!r} is not an element of the ambient order")
    return fin_leq_by(a, b, amb.le)


def fin_leq_by(a, b, le):
    return all(any(le(x, y) for y in b) for x in a)


# -- enumeration helpers ------------------------------------------------------

@lru_cache(maxsize=None)
def posets_of_size(n):
    """All canonical posets with ``n`` elements, deterministic order."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    seen = {}
    for bits in product((False, True), repeat=len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(pairs, bits):
            rel[i][j] = b
        rows = tuple(tuple(r) for r in rel)
        if kernels.order_violation(kernels.as_matrix(rows) if n else np.zeros((0, 0), np.uint8)):
            continue
        canon = canonicalize(FinPoset._from_rows(range(n), rows)).canon
        seen.setdefault(canon.pattern(), canon)
    return tuple(seen[k] for k in sorted(seen))


def posets_upto(n):
    return [p for k in range(n + 1) for p in posets_of_size(k)]


def quasi_embeddings(a, b, kind="quasi"):
    """All quasi embeddings (or embeddings) ``a -> b``."""
    out = []
    for imgs in permutations(b.elems, len(a)):
        f = QuasiMap(a, b, dict(zip(a.elems, imgs)), kind, check=False)
        if f.is_embedding() if kind == "embedding" else f.is_quasi():
            out.append(f)
    return out


def increasing_maps(m, n):
    """Strictly increasing maps ``m -> n`` as tuples of images."""
    return list(combinations(range(n), m))
