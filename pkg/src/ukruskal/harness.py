"""Desk-scale verification: bad-sequence search, naive oracles and the acceptance suite.

The oracles re-derive every order from its definition along a different
route than the primary code: comparisons are tabulated bottom-up over a
subterm-closed set instead of memoized recursion, payloads are compared
after pushing leaves to the actual subterms instead of through canonical
unions, canonical labels come from a plain permutation search, and Higman
embeddings are found by trying every increasing map.
"""

import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from . import combinators as C
from . import kernels
from .dilator import ExprDilator, validate
from .finposet import antichain, chain, posets_upto
from .kruskal import TWUniverse, seq_fixed_point
from .theta import ThetaSystem
from .wd import (WDDilator, cnfs, embs, h_min, hig_set, leq_H, monotonicity_witness,
                 nu_canonical, theta_to_tw)

DEFAULT_SEED = 20240917


@contextmanager
def deep_recursion(limit=10000):
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


# -- bad sequences ------------------------------------------------------------------

@dataclass(frozen=True)
class OrderOracle:
    universe: tuple
    leq: object

    def matrix(self):
        n = len(self.universe)
        M = np.zeros((n, n), dtype=np.uint8)
        for i, s in enumerate(self.universe):
            for j, t in enumerate(self.universe):
                M[i, j] = i == j or bool(self.leq(s, t))
        return M


@dataclass
class BadSeqReport:
    longest: int
    witness: list
    exhaustive: bool


def is_bad(seq, leq):
    return not any(leq(seq[i], seq[j]) for i, j in combinations(range(len(seq)), 2))


def longest_bad(oracle, cap):
    """Longest sequence with no ``i < j`` such that ``x_i <= x_j``, searched up to ``cap``.

    Repeating an element makes a sequence good at once, so the search only
    walks repetition-free sequences.
    """
    M = np.ascontiguousarray(oracle.matrix())
    length, idx, exhaustive = kernels.longest_bad(M, cap)
    witness = [oracle.universe[i] for i in idx]
    if not is_bad(witness, oracle.leq):
        raise AssertionError("bad-sequence witness failed re-validation")
    return BadSeqReport(length, witness, bool(exhaustive))


def brute_force_longest_bad(universe, leq):
    """Exhaustive search over all repetition-free sequences (small universes only)."""
    best = 0
    for k in range(len(universe), 0, -1):
        for subset in combinations(universe, k):
            if any(is_bad(p, leq) for p in permutations(subset)):
                return k
    return best


def reverse_linear_extension(universe, leq):
    """A bad enumeration of the whole universe: maximal elements first."""
    import networkx as nx

    G = nx.DiGraph()
    G.add_nodes_from(range(len(universe)))
    G.add_edges_from((j, i) for i, j in permutations(range(len(universe)), 2)
                     if leq(universe[i], universe[j]))
    return [universe[i] for i in nx.lexicographical_topological_sort(G)]


def antichain_width(universe, leq):
    """Size of a largest antichain (Dilworth via bipartite matching)."""
    import networkx as nx

    n = len(universe)
    G = nx.Graph()
    left = [("l", i) for i in range(n)]
    G.add_nodes_from(left)
    G.add_nodes_from(("r", i) for i in range(n))
    G.add_edges_from((("l", i), ("r", j)) for i, j in permutations(range(n), 2)
                     if leq(universe[i], universe[j]))
    matching = nx.bipartite.hopcroft_karp_matching(G, top_nodes=left)
    return n - len(matching) // 2


# -- oracles ---------------------------------------------------------------------------

def oracle_higman(le, xs, ys):
    """Try every strictly increasing map."""
    return any(all(le(x, ys[j]) for x, j in zip(xs, h))
               for h in combinations(range(len(ys)), len(xs)))


def oracle_elem_leq(expr, le, s, t):
    """Combinator order written out clause by clause, with brute-force Higman."""
    if isinstance(expr, C.Id):
        return s.x == t.x or le(s.x, t.x)
    if isinstance(expr, C.Const):
        return expr.poset.le(s.value, t.value)
    if isinstance(expr, C.ConstL):
        return s.value <= t.value
    if isinstance(expr, (C.Sum, C.SumLex)):
        if type(s) is type(t):
            side = expr.left if isinstance(s, C.Inl) else expr.right
            return oracle_elem_leq(side, le, s.e, t.e)
        return isinstance(expr, C.SumLex) and isinstance(s, C.Inl)
    if isinstance(expr, C.Prod):
        return (oracle_elem_leq(expr.left, le, s.left, t.left)
                and oracle_elem_leq(expr.right, le, s.right, t.right))
    if isinstance(expr, C.ProdLex):
        first_lt = s.left != t.left and oracle_elem_leq(expr.left, le, s.left, t.left)
        return first_lt or (s.left == t.left and oracle_elem_leq(expr.right, le, s.right, t.right))
    if isinstance(expr, C.OnePlus):
        if isinstance(s, C.Zero) or isinstance(t, C.Zero):
            return isinstance(s, C.Zero) and isinstance(t, C.Zero)
        return oracle_elem_leq(expr.inner, le, s.e, t.e)
    if isinstance(expr, C.Higman):
        return oracle_higman(lambda x, y: oracle_elem_leq(expr.inner, le, x, y), s.items, t.items)
    raise TypeError(f"unknown expression {expr!r}")


def oracle_payload_leq(W, le, s, t):
    if isinstance(W, WDDilator):
        D = W.D
        return any(all(le(x, t.emb[j]) for x, j in zip(s.emb, h))
                   and oracle_elem_leq(D.expr, lambda i, j: i <= j,
                                       D.fmap(lambda i: h[i], s.payload), t.payload)
                   for h in combinations(range(len(t.emb)), len(s.emb)))
    return oracle_elem_leq(W.expr, le, s, t)


def oracle_labels(items, le):
    """Canonical enumeration of a finite order by plain search over all orderings."""
    items = list(items)
    n = len(items)
    below = [sum(le(y, x) for y in items) for x in items]
    if all(le(x, y) or le(y, x) for x, y in combinations(items, 2)):
        return [items[i] for i in sorted(range(n), key=below.__getitem__)]
    # items arrive in sorted storage order, matching the primary's indexing
    best = None
    for order in permutations(range(n)):
        bits = [int(i != j and le(items[order[i]], items[order[j]]))
                for i in range(n) for j in range(n)]
        if best is None or bits < best[0]:
            best = (bits, order)
    return [items[i] for i in best[1]]


def _size_sorted_pairs(terms):
    return sorted(((s, t) for s in terms for t in terms), key=lambda p: p[0].size + p[1].size)


def closure(terms):
    seen = {}
    stack = list(terms)
    while stack:
        t = stack.pop()
        if t not in seen:
            seen[t] = t
            stack.extend(t.children)
    return list(seen)


def oracle_tw_table(W, terms):
    """``≤_{𝒯W}`` on a set of terms, filled bottom-up from the definition."""
    terms = closure(terms)
    table = {}

    def le(x, y):
        return x == y or table[x, y]

    for s, t in _size_sorted_pairs(terms):
        if s == t:
            table[s, t] = True
            continue
        if any(le(s, c) for c in t.children):
            table[s, t] = True
            continue
        en_s = oracle_labels(sorted(s.children), le)
        en_t = oracle_labels(sorted(t.children), le)
        lo = W.fmap(lambda i: en_s[i], s.payload)
        hi = W.fmap(lambda i: en_t[i], t.payload)
        table[s, t] = oracle_payload_leq(W, le, lo, hi)
    return table


def oracle_theta_table(D, terms):
    """Strict ``<`` of ``ϑ(D)`` on a set of terms, filled bottom-up."""
    terms = closure(terms)
    table = {}

    def lt(x, y):
        return x != y and table[x, y]

    def le(x, y):
        return x == y or table[x, y]

    for s, t in _size_sorted_pairs(terms):
        if s == t:
            table[s, t] = False
            continue
        if any(le(s, u) for u in t.args):
            table[s, t] = True
            continue
        if not all(lt(u, t) for u in s.args):
            table[s, t] = False
            continue
        en_s = sorted(s.args, key=lambda u: sum(lt(v, u) for v in s.args))
        en_t = sorted(t.args, key=lambda u: sum(lt(v, u) for v in t.args))
        lo = D.fmap(lambda i: en_s[i], s.payload)
        hi = D.fmap(lambda i: en_t[i], t.payload)
        table[s, t] = lo != hi and oracle_elem_leq(D.expr, le, lo, hi)
    return table


# -- random deep terms -------------------------------------------------------------------

def random_terms(build, trace, rng, count, max_size, max_children=3):
    """Grow a pool of distinct terms by random construction from earlier pool members."""
    pool = []
    seen = set()
    tries = 0
    while len(pool) < count and tries < 50 * count:
        tries += 1
        k = rng.randint(0, min(max_children, len(pool)))
        kids = rng.sample(pool, k) if k else []
        if len({id(x) for x in kids}) != k:
            continue
        room = max_size - sum(x.size for x in kids)
        if room < 1:
            continue
        options = [s for p in range(1, room + 1) for s in trace(len(kids), p)]
        if not options:
            continue
        try:
            t = build(kids, rng.choice(options))
        except (ValueError, KeyError):
            continue
        if t not in seen:
            seen.add(t)
            pool.append(t)
    return pool


# -- universes used by the suite -----------------------------------------------------------

def acceptance_dilators():
    Z2, A2 = chain(2), antichain(2)
    return {
        "W_Z(2-chain)": (ExprDilator(C.w_z(Z2)), 15),
        "W_Z(2-antichain)": (ExprDilator(C.w_z(A2)), 15),
        "prod(const 2-chain, higman(id))": (ExprDilator(C.w_a(Z2)), 9),
        "one_plus(higman(id))": (ExprDilator(C.OnePlus(C.Higman(C.Id()))), 6),
    }


def lo_dilators():
    return {
        "sumLex(constL 1, idL)": (ExprDilator(C.SumLex(C.ConstL(1), C.Id()), "LO"), 100),
        "1+2xX^2": (ExprDilator(C.one_plus_two_x_squared()), 14),
    }


@lru_cache(maxsize=None)
def tw_universe(name):
    W, bound = acceptance_dilators()[name]
    U = TWUniverse(W)
    terms = U.enumerate(bound)
    n = len(terms)
    L = np.zeros((n, n), dtype=np.uint8)
    for i, s in enumerate(terms):
        for j, t in enumerate(terms):
            L[i, j] = U.leq(s, t)
    return U, terms, L


@lru_cache(maxsize=None)
def theta_fragment(name):
    D, bound = lo_dilators()[name]
    with deep_recursion():
        S = ThetaSystem(D)
        terms = S.enumerate(bound)
        n = len(terms)
        Lt = np.zeros((n, n), dtype=np.uint8)
        for i, s in enumerate(terms):
            for j, t in enumerate(terms):
                Lt[i, j] = S.lt(s, t)
    return S, terms, Lt


# -- criteria --------------------------------------------------------------------------

@dataclass
class CriterionResult:
    id: int
    name: str
    passed: bool = True
    counts: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    counterexample: object = None
    seconds: float = 0.0

    def fail(self, witness):
        if self.passed:
            self.passed = False
            self.counterexample = witness

    def line(self):
        return f"criterion {self.id:2d} {'PASS' if self.passed else 'FAIL'}: {self.name}"


def c01(cfg):
    r = CriterionResult(1, "dilator laws for the four PO dilators", bounds={"max_poset": 3, "max_elem": 4})
    for name, (W, _) in acceptance_dilators().items():
        rep = validate(W, 3, 4)
        r.counts[name] = sum(law.checked for law in rep.laws)
        for law in rep.laws:
            if not law.passed:
                r.fail({"dilator": name, "law": law.name, "witness": law.counterexample})
    return r


def c02(cfg):
    r = CriterionResult(2, "TW partial-order axioms")
    for name, (_, bound) in acceptance_dilators().items():
        _, terms, L = tw_universe(name)
        r.counts[name] = len(terms)
        r.bounds[name] = bound
        if len(terms) < 150:
            r.fail({"dilator": name, "reason": f"only {len(terms)} terms"})
        bad = kernels.order_violation(L)
        if bad:
            r.fail({"dilator": name, "axiom": bad[0], "terms": [terms[i].sexpr for i in bad[1]]})
    return r


def c03(cfg):
    r = CriterionResult(3, "height monotonicity")
    for name in acceptance_dilators():
        _, terms, L = tw_universe(name)
        h = np.array([t.height for t in terms])
        i, j = np.nonzero(L)
        viol = np.flatnonzero(h[i] > h[j])
        r.counts[name] = {"pairs": int(len(i)), "violations": int(len(viol))}
        if len(viol):
            k = viol[0]
            r.fail({"dilator": name, "lower": terms[i[k]].sexpr, "upper": terms[j[k]].sexpr})
    return r


def c04(cfg):
    r = CriterionResult(4, "Kruskal fixed-point law")
    for name in acceptance_dilators():
        U, terms, _ = tw_universe(name)
        for t in terms:
            if U.kappa(U.kappa_inv(t)) is not t:
                r.fail({"dilator": name, "round-trip": t.sexpr})
        bad = U.check_fixed_point(terms)
        r.counts[name] = {"pairs": len(terms) ** 2, "violations": len(bad)}
        if bad:
            r.fail({"dilator": name, "pair": [repr(x) for x in bad[0]]})
    return r


def c05(cfg):
    r = CriterionResult(5, "TW_Z is isomorphic to Seq(Z)", bounds={"max_len": 4, "term_size": 9})
    for zname, Z in (("2-chain", chain(2)), ("2-antichain", antichain(2))):
        U = TWUniverse(ExprDilator(C.w_z(Z)))
        terms = U.enumerate(9)
        fp = seq_fixed_point(Z)
        f = U.initial_map(fp)
        images = [f(t) for t in terms]
        expected = {s for n in range(5) for s in product(Z.elems, repeat=n)}
        r.counts[zname] = {"terms": len(terms), "pairs": len(terms) ** 2}
        if len(set(images)) != len(terms) or set(images) != expected:
            r.fail({"Z": zname, "reason": "initial map is not a bijection onto sequences of length <= 4"})
        for (s, x), (t, y) in product(zip(terms, images), repeat=2):
            if U.leq(s, t) != oracle_higman(Z.le, x, y):
                r.fail({"Z": zname, "pair": [s.sexpr, t.sexpr]})
    return r


def c06(cfg):
    r = CriterionResult(6, "theta(D) is a strict linear order")
    for name, (_, bound) in lo_dilators().items():
        _, terms, Lt = theta_fragment(name)
        n = len(terms)
        r.counts[name] = n
        r.bounds[name] = bound
        if n < 100:
            r.fail({"dilator": name, "reason": f"only {n} terms"})
        eye = np.eye(n, dtype=np.uint8)
        tri = Lt.astype(int) + Lt.T + eye
        if (tri != 1).any():
            i, j = np.argwhere(tri != 1)[0]
            r.fail({"dilator": name, "trichotomy": [terms[i].sexpr, terms[j].sexpr]})
        bad = kernels.order_violation(np.ascontiguousarray(Lt | eye))
        if bad:
            r.fail({"dilator": name, "axiom": bad[0]})
    return r


def c07(cfg):
    r = CriterionResult(7, "theta(D) quasi-embeds into TW_D")
    for name in lo_dilators():
        S, terms, Lt = theta_fragment(name)
        D = S.D
        with deep_recursion():
            U = TWUniverse(WDDilator(D))
            f = theta_to_tw(S, U, nu_canonical(D))
            images = [f(t) for t in terms]
            W = U.W
            for y in images:
                if not (W.is_element(y.base.canon, y.payload)
                        and W.support(y.payload) == frozenset(y.base.canon.elems)):
                    r.fail({"dilator": name, "invalid image": y.sexpr})
            viol = 0
            for i, j in product(range(len(terms)), repeat=2):
                if U.leq(images[i], images[j]) and not (i == j or Lt[i, j]):
                    viol += 1
                    r.fail({"dilator": name, "pair": [terms[i].sexpr, terms[j].sexpr]})
        if len(set(images)) != len(images):
            r.fail({"dilator": name, "reason": "map is not injective"})
        r.counts[name] = {"terms": len(terms), "pairs": len(terms) ** 2, "violations": viol}
    return r


def c08(cfg):
    name, (D, _) = next(iter(lo_dilators().items()))
    r = CriterionResult(8, "W_D is a normal PO-dilator", bounds={"max_poset": 3, "payload": 3})
    rep = validate(WDDilator(D), 3, 3)
    r.counts[name] = {law.name: law.checked for law in rep.laws}
    for law in rep.laws:
        if not law.passed:
            r.fail({"law": law.name, "witness": law.counterexample})
    return r


def c09(cfg):
    r = CriterionResult(9, "nu: D => W_D", bounds={"max_chain": 4, "max_elem": 4})
    for name, (D, _) in lo_dilators().items():
        nu = nu_canonical(D)
        W = nu.W
        counts = {"quasi": 0, "naturality": 0, "support": 0}
        for m in range(5):
            a = chain(m)
            elems = D.elements(a, 4)
            images = [nu(m, s) for s in elems]
            for s, y in zip(elems, images):
                counts["support"] += 1
                if not W.is_element(a, y) or W.support(y) != D.support(s):
                    r.fail({"dilator": name, "m": m, "support": D.sexpr(s)})
            for (s, x), (t, y) in product(zip(elems, images), repeat=2):
                counts["quasi"] += 1
                if W.leq_by(a.le, x, y) and not D.leq_by(a.le, s, t):
                    r.fail({"dilator": name, "m": m, "pair": [D.sexpr(s), D.sexpr(t)]})
            for n in range(m, 5):
                for img in combinations(range(n), m):
                    f = dict(zip(range(m), img))
                    for s, x in zip(elems, images):
                        counts["naturality"] += 1
                        if nu(n, D.fmap(f.__getitem__, s)) != W.fmap(f.__getitem__, x):
                            r.fail({"dilator": name, "map": img, "element": D.sexpr(s)})
        r.counts[name] = counts
    return r


def c10(cfg):
    r = CriterionResult(10, "h[u,w] is the pointwise least Higman witness",
                        bounds={"max_poset": 3, "max_len": 4})
    checked = 0
    for X in posets_upto(3):
        us = embs(X.elems, X.le, 4)
        for u, w in product(us, repeat=2):
            hs = hig_set(u, w, X.le)
            brute = [h for h in combinations(range(len(w)), len(u))
                     if all(X.le(x, w[j]) for x, j in zip(u, h))]
            if hs != brute or bool(hs) != leq_H(u, w, X.le):
                r.fail({"poset": repr(X), "u": u, "w": w, "reason": "witness set mismatch"})
            if hs:
                hm = h_min(u, w, X.le)
                checked += 1
                if hm not in hs or any(a > b for h in hs for a, b in zip(hm, h)):
                    r.fail({"poset": repr(X), "u": u, "w": w, "h_min": hm})
    r.counts["pairs with witnesses"] = checked
    return r


def c11(cfg):
    r = CriterionResult(11, "omega^omega monotonicity witness", bounds={"max_n": 4, "max_exp": 5, "max_len": 3})
    alphas = cnfs(5, 3)
    pairs = 0
    for m in range(1, 5):
        for n in range(m, 5):
            maps = list(combinations(range(n), m))
            for f, g in product(maps, repeat=2):
                if any(x > y for x, y in zip(f, g)):
                    continue
                pairs += 1
                h, hp = monotonicity_witness(f, g)
                for i in range(m):
                    if h(g[i]) != hp(h(f[i])):
                        r.fail({"f": f, "g": g, "i": i})
                vals = [hp(a) for a in alphas]
                for x, y in combinations(range(len(alphas)), 2):
                    if not vals[x] < vals[y]:
                        r.fail({"f": f, "g": g, "alpha": repr(alphas[x]), "beta": repr(alphas[y])})
    r.counts = {"map pairs": pairs, "cnfs": len(alphas)}
    return r


def c12(cfg):
    r = CriterionResult(12, "primary comparisons agree with naive oracles",
                        bounds={"random_pairs": cfg.random_pairs, "seed": cfg.seed})
    rng = random.Random(cfg.seed)
    with deep_recursion():
        for name in acceptance_dilators():
            U, terms, L = tw_universe(name)
            table = oracle_tw_table(U.W, terms)
            bad = [(s, t) for (i, s), (j, t) in product(enumerate(terms), repeat=2)
                   if bool(L[i, j]) != table[s, t]]
            r.counts[f"tw {name}"] = len(terms) ** 2
            if bad:
                r.fail({"order": "tw", "dilator": name, "pair": [x.sexpr for x in bad[0]]})
        for name in lo_dilators():
            S, terms, Lt = theta_fragment(name)
            table = oracle_theta_table(S.D, terms)
            bad = [(s, t) for (i, s), (j, t) in product(enumerate(terms), repeat=2)
                   if bool(Lt[i, j]) != table[s, t]]
            r.counts[f"theta {name}"] = len(terms) ** 2
            if bad:
                r.fail({"order": "theta", "dilator": name, "pair": [x.sexpr for x in bad[0]]})
        higman = C.Higman(C.Id())
        n_hig = 0
        for X in posets_upto(3):
            seqs = [s.items for s in C.elements(higman, X, 4)]
            for xs, ys in product(seqs, repeat=2):
                n_hig += 1
                lhs = C.elem_leq(higman, X.le, C.Seq(xs), C.Seq(ys))
                if lhs != oracle_higman(lambda x, y: X.le(x.x, y.x), xs, ys):
                    r.fail({"order": "higman", "poset": repr(X), "pair": [xs, ys]})
        r.counts["higman exhaustive"] = n_hig
        r.counts["random"] = _random_agreement(r, rng, cfg.random_pairs)
    return r


def _random_agreement(r, rng, npairs):
    counts = {}
    # 𝒯W over W_A with deeper, wider terms than the enumerated fragment
    W = ExprDilator(C.w_a(chain(2)))
    U = TWUniverse(W)
    # W_A payloads only depend on the number of children, not on their order
    pool = random_terms(U.build, lambda c, p: W.trace_of_size(antichain(c), p), rng, 150, 14)
    table = oracle_tw_table(W, pool)
    for _ in range(npairs):
        s, t = rng.choice(pool), rng.choice(pool)
        if U.leq(s, t) != table[s, t]:
            r.fail({"order": "tw random", "pair": [s.sexpr, t.sexpr]})
    counts["tw"] = npairs
    D = ExprDilator(C.one_plus_two_x_squared())
    S = ThetaSystem(D)
    pool = random_terms(S.build, lambda c, p: D.trace_of_size(chain(c), p), rng, 150, 16, 2)
    table = oracle_theta_table(D, pool)
    for _ in range(npairs):
        s, t = rng.choice(pool), rng.choice(pool)
        if S.lt(s, t) != table[s, t]:
            r.fail({"order": "theta random", "pair": [s.sexpr, t.sexpr]})
    counts["theta"] = npairs
    for _ in range(npairs):
        X = rng.choice(posets_upto(3))
        xs = tuple(rng.choice(X.elems) for _ in range(rng.randint(0, 5))) if len(X) else ()
        ys = tuple(rng.choice(X.elems) for _ in range(rng.randint(0, 7))) if len(X) else ()
        if C.higman_leq(X.le, xs, ys) != oracle_higman(X.le, xs, ys):
            r.fail({"order": "higman random", "pair": [xs, ys]})
    counts["higman"] = npairs
    return counts


def c13(cfg):
    r = CriterionResult(13, "bounded bad-sequence evidence")
    rng = random.Random(cfg.seed)
    for name in acceptance_dilators():
        U, terms, L = tw_universe(name)
        oracle = OrderOracle(tuple(terms), U.leq)
        rep = longest_bad(oracle, len(terms))
        ext = reverse_linear_extension(terms, U.leq)
        independent = len(ext) if is_bad(ext, U.leq) and len(set(ext)) == len(terms) else None
        small = 0
        for _ in range(cfg.small_samples):
            sub = tuple(rng.sample(terms, min(8, len(terms))))
            small += 1
            got = longest_bad(OrderOracle(sub, U.leq), len(sub)).longest
            if got != brute_force_longest_bad(sub, U.leq):
                r.fail({"dilator": name, "sub-universe": [t.sexpr for t in sub]})
        r.counts[name] = {"universe": len(terms), "longest": rep.longest,
                          "independent": independent, "brute-force samples": small}
        if rep.longest != independent or not rep.exhaustive:
            r.fail({"dilator": name, "longest": rep.longest, "independent": independent})
    return r


CRITERIA = [c01, c02, c03, c04, c05, c06, c07, c08, c09, c10, c11, c12, c13]


@dataclass
class SuiteConfig:
    seed: int = DEFAULT_SEED
    random_pairs: int = 10_000
    small_samples: int = 20
    jobs: int = 0
    only: tuple = ()


def run_criterion(k, cfg):
    fn = CRITERIA[k - 1]
    start = time.perf_counter()
    with deep_recursion():
        try:
            res = fn(cfg)
        except Exception as err:  # a crash is a failed criterion, not a crashed suite
            res = CriterionResult(k, fn.__name__, passed=False,
                                  counterexample=f"{type(err).__name__}: {err}")
    res.seconds = round(time.perf_counter() - start, 3)
    return res


def default_jobs():
    env = os.environ.get("UKRUSKAL_JOBS", "")
    return int(env) if env.isdigit() and int(env) > 0 else (os.cpu_count() or 1)


def run_suite(cfg=None):
    """Run the acceptance criteria; returns a JSON-ready report."""
    cfg = cfg or SuiteConfig()
    ids = list(cfg.only) or list(range(1, len(CRITERIA) + 1))
    for k in ids:
        if not 1 <= k <= len(CRITERIA):
            raise ValueError(f"no criterion {k}")
    jobs = cfg.jobs or default_jobs()
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_criterion, ids, [cfg] * len(ids)))
    else:
        results = [run_criterion(k, cfg) for k in ids]
    return {
        "seed": cfg.seed,
        "config": asdict(cfg),
        "backend": kernels.BACKEND,
        "failures": sum(not x.passed for x in results),
        "criteria": [asdict(x) for x in results],
    }


def report_text(report):
    lines = [f"seed {report['seed']}, kernels {report['backend']}"]
    for c in report["criteria"]:
        status = "PASS" if c["passed"] else "FAIL"
        lines.append(f"criterion {c['id']:2d} {status} ({c['seconds']:.1f}s): {c['name']}")
        if not c["passed"]:
            lines.append(f"    counterexample: {json.dumps(c['counterexample'], default=str)}")
    lines.append(f"{report['failures']} failure(s)")
    return "\n".join(lines)
