"""Coded dilators: functor action, supports, traces, extension and validation.

A dilator is handled through :class:`Dilator`.  Concrete subclasses decide
the element shapes; everything here (trace, extension ``Ŵ(X)``,
reconstruction and the exhaustive law checker) only uses the abstract
interface below.
"""

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations

import numpy as np

from . import combinators as C
from . import kernels
from .finposet import (FinPoset, MapError, QuasiMap, antichain, canonicalize, chain,
                       posets_upto, quasi_embeddings)


class TraceError(ValueError):
    """An element does not have full support over its base."""


class Dilator:
    """Interface shared by expression dilators and the ``W_D`` construction.

    ``flavor`` is ``"PO"`` (functor on finite partial orders and quasi
    embeddings) or ``"LO"`` (functor on finite chains and strictly increasing
    maps).
    """

    flavor = "PO"

    def elements_of_size(self, a, k):
        raise NotImplementedError

    def elements(self, a, bound):
        """Elements of ``W(a)`` of size at most ``bound``."""
        return [s for k in range(1, bound + 1) for s in self.elements_of_size(a, k)]

    def leq_by(self, le, s, t):
        """Order of ``W(X)`` where ``le`` compares elements of ``X``."""
        raise NotImplementedError

    def fmap(self, f, s):
        """``W(f)(s)``; ``f`` is any callable on leaves."""
        raise NotImplementedError

    def support(self, s):
        raise NotImplementedError

    def unmap(self, f, t):
        raise NotImplementedError

    def size(self, s):
        raise NotImplementedError

    def is_element(self, a, s):
        raise NotImplementedError

    def sexpr(self, s):
        return repr(s)

    # derived operations ------------------------------------------------------

    def leq(self, a, s, t):
        if not (self.is_element(a, s) and self.is_element(a, t)):
            raise C.ShapeError("element is not in W(a)")
        return self.leq_by(a.le, s, t)

    def apply(self, f, s):
        """``W(f)(s)`` for a :class:`QuasiMap` ``f`` with membership checks."""
        if not self.is_element(f.dom, s):
            raise C.ShapeError("element is not in W(dom f)")
        return self.fmap(f, s)

    def trace(self, a, bound):
        """Elements of ``W(a)`` with support all of ``a``."""
        return [s for k in range(1, bound + 1) for s in self.trace_of_size(a, k)]

    def trace_of_size(self, a, k):
        full = frozenset(a.elems)
        return [s for s in self.elements_of_size(a, k) if self.support(s) == full]

    def trace_feasible(self, c, p):
        """Whether a ``c``-element order carries a trace element of size ``p``."""
        return bool(self.trace_of_size(antichain(c), p))

    def trace_push(self, g, s):
        """Move a trace element over ``|dom g|`` to ``|cod g|`` along ``|g|``.

        ``g`` must be a surjective quasi embedding.
        """
        if not g.is_surjective():
            raise MapError("trace_push needs a surjective map")
        ca, cb = canonicalize(g.dom), canonicalize(g.cod)
        labels = cb.labels()
        out = self.fmap(lambda i: labels[g(ca.en[i])], s)
        if self.support(out) != frozenset(cb.canon.elems):
            raise TraceError("pushed element lost full support")
        return out


class ExprDilator(Dilator):
    """A dilator given by a combinator expression."""

    def __init__(self, expr, flavor=None, *, asserted=False):
        # ``asserted`` takes the flavor on trust; validate is then the judge
        inferred = C.flavor_of(expr)
        if not asserted and flavor is not None and inferred is not None and flavor != inferred:
            raise C.ShapeError(f"expression is {inferred}, requested {flavor}")
        self.expr = expr
        self.flavor = flavor or inferred or "PO"
        self._traces = {}

    def __repr__(self):
        return f"ExprDilator({self.expr!r}, {self.flavor})"

    def __eq__(self, other):
        return isinstance(other, ExprDilator) and (self.expr, self.flavor) == (other.expr, other.flavor)

    def __hash__(self):
        return hash((self.expr, self.flavor))

    def elements_of_size(self, a, k):
        return C.elements_of_size(self.expr, a, k)

    def trace_of_size(self, a, k):
        key = (a, k)
        hit = self._traces.get(key)
        if hit is None:
            full = frozenset(a.elems)
            if C.trace_feasible(self.expr, len(a), k):
                hit = tuple(s for s in self.elements_of_size(a, k) if C.elem_support(s) == full)
            else:
                hit = ()
            self._traces[key] = hit
        return hit

    def trace_feasible(self, c, p):
        return C.trace_feasible(self.expr, c, p)

    def leq_by(self, le, s, t):
        return C.elem_leq(self.expr, le, s, t)

    def fmap(self, f, s):
        return C.elem_map(f, s)

    def support(self, s):
        return C.elem_support(s)

    def unmap(self, f, t):
        return C.elem_unmap(f, t)

    def size(self, s):
        return C.size(s)

    def is_element(self, a, s):
        return C.is_element(self.expr, a, s)

    def sexpr(self, s):
        return C.to_sexpr(s)


# -- extension ------------------------------------------------------------------

@dataclass(frozen=True)
class ExtElem:
    """``(a, σ)`` with ``a`` a finite subset of an ambient order and ``σ`` over ``|a|``."""

    support: frozenset
    elem: object


def suborder_by(subset, le):
    """Finite suborder of an ambient order given by its comparison callback."""
    return FinPoset(subset, le)


def ext_check(W, le, e):
    ca = canonicalize(suborder_by(e.support, le))
    if not W.is_element(ca.canon, e.elem) or W.support(e.elem) != frozenset(ca.canon.elems):
        raise TraceError(f"({sorted(e.support)}, {W.sexpr(e.elem)}) is not a trace pair")
    return ca


def _lift_into(W, ca, cu, s):
    # W(|ι_a^{a∪b}|)(s): label i of |a| goes to the label of en_a(i) in |a∪b|
    labels = cu.labels()
    return W.fmap(lambda i: labels[ca.en[i]], s)


def ext_compare(W, le, x, y):
    """``(a,σ) <= (b,τ)`` in ``Ŵ(X)``."""
    ca, cb = ext_check(W, le, x), ext_check(W, le, y)
    cu = canonicalize(suborder_by(x.support | y.support, le))
    return W.leq_by(cu.canon.le, _lift_into(W, ca, cu, x.elem), _lift_into(W, cb, cu, y.elem))


def ext_map(W, f, le_x, le_y, x):
    """``Ŵ(f)((a,σ)) = (f[a], W(|f↾a|)(σ))``; ``f`` maps ambient elements."""
    ca = ext_check(W, le_x, x)
    image = frozenset(f(v) for v in x.support)
    if len(image) != len(x.support):
        raise MapError("map is not injective on the support")
    cf = canonicalize(suborder_by(image, le_y))
    labels = cf.labels()
    return ExtElem(image, W.fmap(lambda i: labels[f(ca.en[i])], x.elem))


def ext_support(x):
    return x.support


def ext_elements(W, universe, le, bound, max_support=None):
    """All trace pairs over subsets of a finite universe, payload size ``<= bound``."""
    universe = sorted(universe)
    top = len(universe) if max_support is None else min(max_support, len(universe))
    out = []
    for k in range(top + 1):
        for subset in combinations(universe, k):
            ca = canonicalize(suborder_by(subset, le))
            for s in W.trace(ca.canon, bound):
                out.append(ExtElem(frozenset(subset), s))
    return out


def reconstruct(W, X, x):
    """``η_X((a,σ)) = W(ι_a^X ∘ en_a)(σ)`` for a finite ambient order ``X``."""
    if not set(x.support) <= set(X.elems):
        raise MapError("support is not contained in X")
    ca = ext_check(W, X.le, x)
    return W.fmap(lambda i: ca.en[i], x.elem)


def unreconstruct(W, X, s):
    """Inverse of :func:`reconstruct`: the trace pair behind ``s ∈ W(X)``."""
    supp = W.support(s)
    ca = canonicalize(X.suborder(supp))
    return ExtElem(frozenset(supp), W.unmap(dict(enumerate(ca.en)), s))


# -- validation -----------------------------------------------------------------

@dataclass
class LawResult:
    name: str
    passed: bool = True
    checked: int = 0
    counterexample: object = None
    bounds: dict = field(default_factory=dict)

    def fail(self, witness):
        if self.passed:
            self.passed = False
            self.counterexample = witness


@dataclass
class ValidationReport:
    flavor: str
    bounds: dict
    laws: list

    @property
    def passed(self):
        return all(law.passed for law in self.laws)

    def law(self, name):
        return next(law for law in self.laws if law.name == name)

    def to_dict(self):
        return {"flavor": self.flavor, "bounds": self.bounds, "passed": self.passed,
                "laws": [asdict(law) for law in self.laws]}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, default=str)

    def to_text(self):
        lines = [f"flavor {self.flavor}, bounds {self.bounds}"]
        for law in self.laws:
            status = "PASS" if law.passed else "FAIL"
            lines.append(f"{status} {law.name} ({law.checked} checks)")
            if not law.passed:
                lines.append(f"     counterexample: {law.counterexample}")
        return "\n".join(lines)


class _Table:
    """Elements of one ``W(a)`` with index lookup, order matrix and support masks."""

    def __init__(self, W, a, bound):
        self.a = a
        self.elems = W.elements(a, bound)
        self.index = {s: i for i, s in enumerate(self.elems)}
        n = len(self.elems)
        self.L = np.zeros((n, n), dtype=np.uint8)
        le = a.le
        for i, s in enumerate(self.elems):
            for j, t in enumerate(self.elems):
                self.L[i, j] = W.leq_by(le, s, t)
        pos = {x: k for k, x in enumerate(a.elems)}
        self.supp = [frozenset(W.support(s)) for s in self.elems]
        self.mask = np.array([sum(1 << pos[x] for x in sp) for sp in self.supp], dtype=np.int64)
        # down[k]: bitmask of elements of a below element k
        self.down = [sum(1 << pos[y] for y in a.elems if a.le(y, x)) for x in a.elems]

    def downset(self, mask):
        out = 0
        k = 0
        while mask:
            if mask & 1:
                out |= self.down[k]
            mask >>= 1
            k += 1
        return out


def _morphisms(W, a, b):
    if W.flavor == "LO":
        return [QuasiMap(a, b, dict(zip(a.elems, img)), "embedding", check=False)
                for img in combinations(b.elems, len(a))]
    return quasi_embeddings(a, b)


def validate(W, max_poset, max_elem):
    """Exhaustive law check of ``W`` on canonical orders of size ``<= max_poset``.

    PO dilators are checked on all canonical posets and quasi embeddings;
    LO dilators on the standard chains and strictly increasing maps, with
    linearity and monotonicity added.
    """
    bounds = {"max_poset": max_poset, "max_elem": max_elem}
    if W.flavor == "LO":
        objects = [chain(n) for n in range(max_poset + 1)]
    else:
        objects = posets_upto(max_poset)
    names = ["order-axioms", "membership", "functor-identity", "functor-composition",
             "quasi-preservation", "embedding-preservation", "support-naturality",
             "support-condition-range", "support-condition-preimage"]
    # normality matters only on the PO side; lexicographic LO products violate it
    names += ["linearity", "monotonicity"] if W.flavor == "LO" else ["normality"]
    laws = {n: LawResult(n, bounds=bounds) for n in names}

    tables = [_Table(W, a, max_elem) for a in objects]
    fmt = W.sexpr

    for T in tables:
        law = laws["order-axioms"]
        law.checked += len(T.elems) ** 2
        bad = kernels.order_violation(T.L) if len(T.elems) else None
        if bad:
            law.fail({"poset": repr(T.a), "axiom": bad[0], "elements": [fmt(T.elems[i]) for i in bad[1]]})
        law = laws["membership"]
        for s in T.elems:
            law.checked += 1
            if not W.is_element(T.a, s):
                law.fail({"poset": repr(T.a), "element": fmt(s)})
        law = laws.get("normality")
        for i, j in zip(*np.nonzero(T.L)) if law else ():
            law.checked += 1
            if T.mask[i] & ~T.downset(int(T.mask[j])):
                law.fail({"poset": repr(T.a), "lower": fmt(T.elems[i]), "upper": fmt(T.elems[j])})
        if W.flavor == "LO":
            law = laws["linearity"]
            law.checked += len(T.elems) ** 2
            gaps = np.argwhere((T.L | T.L.T) == 0)
            if len(gaps):
                i, j = gaps[0]
                law.fail({"poset": repr(T.a), "pair": [fmt(T.elems[i]), fmt(T.elems[j])]})

    # image index arrays for every morphism, keyed by (source, target, images)
    imgs = {}
    homs = {}
    for ia, A in enumerate(tables):
        for ib, B in enumerate(tables):
            fs = _morphisms(W, A.a, B.a) if len(A.a) <= len(B.a) else []
            homs[ia, ib] = fs
            for f in fs:
                img = np.array([B.index.get(W.fmap(f, s), -1) for s in A.elems], dtype=np.int64)
                imgs[ia, ib, f.images] = img
                _check_morphism(W, laws, A, B, f, img, ia == ib)

    law = laws["functor-composition"]
    for (ia, ib), fs in homs.items():
        for ic in range(len(tables)):
            for g in homs.get((ib, ic), ()):
                img_g = imgs[ib, ic, g.images]
                for f in fs:
                    img_f = imgs[ia, ib, f.images]
                    if (img_f < 0).any() or (img_g < 0).any():
                        continue
                    gf = tuple(g(y) for y in f.images)
                    law.checked += len(img_f)
                    if not np.array_equal(imgs[ia, ic, gf], img_g[img_f]):
                        law.fail({"f": repr(f), "g": repr(g)})

    if W.flavor == "LO":
        law = laws["monotonicity"]
        for (ia, ib), fs in homs.items():
            L = tables[ib].L
            for f in fs:
                for g in fs:
                    if all(x <= y for x, y in zip(f.images, g.images)):
                        img_f, img_g = imgs[ia, ib, f.images], imgs[ia, ib, g.images]
                        law.checked += len(img_f)
                        ok = (img_f >= 0) & (img_g >= 0)
                        if not L[img_f[ok], img_g[ok]].all():
                            k = int(np.flatnonzero(~L[img_f[ok], img_g[ok]].astype(bool))[0])
                            law.fail({"f": repr(f), "g": repr(g),
                                      "element": fmt(tables[ia].elems[np.flatnonzero(ok)[k]])})

    return ValidationReport(W.flavor, bounds, [laws[n] for n in names])


def _check_morphism(W, laws, A, B, f, img, same):
    fmt = W.sexpr
    law = laws["membership"]
    law.checked += len(img)
    missing = np.flatnonzero(img < 0)
    if len(missing):
        law.fail({"map": repr(f), "element": fmt(A.elems[missing[0]]), "reason": "image outside W(b)"})
        return
    if same and f.images == f.dom.elems:
        law = laws["functor-identity"]
        law.checked += len(img)
        if not np.array_equal(img, np.arange(len(img))):
            law.fail({"poset": repr(A.a)})
    sub = B.L[np.ix_(img, img)]
    law = laws["quasi-preservation"]
    law.checked += sub.size
    bad = np.argwhere(sub > A.L)
    if len(bad):
        i, j = bad[0]
        law.fail({"map": repr(f), "pair": [fmt(A.elems[i]), fmt(A.elems[j])]})
    if f.is_embedding():
        law = laws["embedding-preservation"]
        law.checked += sub.size
        bad = np.argwhere(sub != A.L)
        if len(bad):
            i, j = bad[0]
            law.fail({"map": repr(f), "pair": [fmt(A.elems[i]), fmt(A.elems[j])]})
    law = laws["support-naturality"]
    for i, k in enumerate(img):
        law.checked += 1
        if B.supp[k] != frozenset(f(x) for x in A.supp[i]):
            law.fail({"map": repr(f), "element": fmt(A.elems[i])})
    if f.is_embedding():
        rng = frozenset(f.images)
        hit = set(img.tolist())
        inside = {k for k, sp in enumerate(B.supp) if sp <= rng}
        law = laws["support-condition-range"]
        law.checked += len(hit)
        if not hit <= inside:
            law.fail({"map": repr(f), "element": fmt(B.elems[min(hit - inside)])})
        law = laws["support-condition-preimage"]
        law.checked += len(inside)
        if not inside <= hit:
            law.fail({"map": repr(f), "element": fmt(B.elems[min(inside - hit)])})
