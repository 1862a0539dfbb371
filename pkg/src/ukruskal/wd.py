"""From LO-dilators to normal PO-dilators.

``W_D(X)`` consists of pairs ``(u, σ)`` where ``u: n -> X`` is a finite
quasi embedding of the chain ``n`` and ``σ ∈ D(n)`` has full support.
``(u,σ) <= (w,τ)`` when some strictly increasing ``h`` with
``u(i) <= w(h(i))`` satisfies ``D(h)σ <= τ``.  This module also holds the
Higman witness machinery, the canonical ``ν: D => W_D``, the map
``ϑ(D) -> 𝒯W`` and the ``ω^ω`` arithmetic behind monotonicity.
"""

from dataclasses import dataclass
from functools import lru_cache, total_ordering
from itertools import combinations, permutations
from operator import le as int_le

import numpy as np

from . import kernels
from .dilator import Dilator, ExtElem, TraceError, ext_map, validate
from .finposet import chain


class NotMonotoneError(ValueError):
    """The LO-dilator failed the monotonicity check."""


class WitnessError(ValueError):
    """No Higman witness exists."""


# -- finite quasi embeddings and Higman witnesses ---------------------------------

def is_emb(u, le):
    """``u(i) <= u(j)`` implies ``i <= j`` (hence ``u`` is injective)."""
    return all(i <= j for i, x in enumerate(u) for j, y in enumerate(u) if le(x, y))


def embs(elems, le, max_len):
    """All finite quasi embeddings into ``elems`` of length ``<= max_len``."""
    return [u for n in range(max_len + 1) for u in permutations(elems, n) if is_emb(u, le)]


def hig_matrix(u, w, le):
    M = np.zeros((len(u), len(w)), dtype=np.uint8)
    for i, x in enumerate(u):
        for j, y in enumerate(w):
            M[i, j] = bool(le(x, y))
    return M


def hig_set(u, w, le):
    """All strictly increasing ``h: [u] -> [w]`` with ``u(i) <= w(h(i))``, lexicographic."""
    return kernels.hig_witnesses(hig_matrix(u, w, le))


def leq_H(u, w, le):
    return kernels.hig_min(hig_matrix(u, w, le)) is not None


def h_min(u, w, le):
    """Greedy witness ``h[u,w]``: each entry takes the least admissible position."""
    h = kernels.hig_min(hig_matrix(u, w, le))
    if h is None:
        raise WitnessError(f"{u} is not below {w} in the Higman order")
    return h


def directed_check(us, le):
    """``(True, None)`` if the list is a ``<=_H`` chain with coherent minimal witnesses.

    Otherwise ``(False, witness)`` where the witness is an offending pair or triple.
    """
    n = len(us)
    for i, j in combinations(range(n), 2):
        if not leq_H(us[i], us[j], le):
            return False, (i, j)
    for i, j, k in combinations(range(n), 3):
        hij, hjk, hik = h_min(us[i], us[j], le), h_min(us[j], us[k], le), h_min(us[i], us[k], le)
        if hik != tuple(hjk[x] for x in hij):
            return False, (i, j, k)
    return True, None


# -- the dilator W_D ---------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class WDElem:
    emb: tuple
    payload: object


class WDDilator(Dilator):
    """``W_D`` for an LO-dilator ``D``; a normal PO-dilator."""

    flavor = "PO"

    def __init__(self, D):
        if D.flavor != "LO":
            raise ValueError("W_D needs an LO-dilator")
        self.D = D

    def __repr__(self):
        return f"WDDilator({self.D!r})"

    def __eq__(self, other):
        return isinstance(other, WDDilator) and self.D == other.D

    def __hash__(self):
        return hash(("wd", self.D))

    def elements_of_size(self, a, k):
        return _wd_elements(self, a, k)

    def trace_feasible(self, c, p):
        # a bijective quasi embedding c -> a exists for every order a (a linear extension)
        return self.D.trace_feasible(c, p)

    def leq_by(self, le, s, t):
        return self.witness(le, s, t) is not None

    def witness(self, le, s, t):
        """Lexicographically first ``h ∈ Hig(u,w)`` with ``D(h)σ <= τ``, or None."""
        D = self.D
        for h in kernels.hig_witnesses(hig_matrix(s.emb, t.emb, le)):
            if D.leq_by(int_le, D.fmap(h.__getitem__, s.payload), t.payload):
                return h
        return None

    def fmap(self, f, s):
        return WDElem(tuple(f(x) for x in s.emb), s.payload)

    def support(self, s):
        return frozenset(s.emb)

    def unmap(self, f, t):
        pairs = f.items() if isinstance(f, dict) else zip(f.dom.elems, f.images)
        inverse = {y: x for x, y in pairs}
        try:
            return WDElem(tuple(inverse[y] for y in t.emb), t.payload)
        except KeyError as err:
            raise TraceError(f"entry {err.args[0]!r} is outside the range of the map") from None

    def size(self, s):
        return self.D.size(s.payload)

    def is_element(self, a, s):
        if not isinstance(s, WDElem) or not all(x in a for x in s.emb):
            return False
        if len(set(s.emb)) != len(s.emb) or not is_emb(s.emb, a.le):
            return False
        n = chain(len(s.emb))
        return self.D.is_element(n, s.payload) and self.D.support(s.payload) == frozenset(n.elems)

    def sexpr(self, s):
        return f"(wd (emb{''.join(' ' + str(x) for x in s.emb)}) {self.D.sexpr(s.payload)})"


@lru_cache(maxsize=None)
def _wd_elements(W, a, k):
    out = []
    for n in range(k + 1):
        trace = W.D.trace_of_size(chain(n), k)
        if not trace:
            continue
        for u in permutations(a.elems, n):
            if is_emb(u, a.le):
                out.extend(WDElem(u, s) for s in trace)
    return tuple(out)


# -- ν: D => W_D ---------------------------------------------------------------------

class DilatorNat:
    """The canonical ``ν_m(σ) = (increasing enumeration of supp σ, σ₀)``."""

    def __init__(self, D):
        self.D = D
        self.W = WDDilator(D)

    def component(self, m, s):
        u = tuple(sorted(self.D.support(s)))
        if any(x not in range(m) for x in u):
            raise TraceError(f"support of {self.D.sexpr(s)} is not inside {m}")
        return WDElem(u, self.D.unmap(dict(enumerate(u)), s))

    __call__ = component


def nu_canonical(D, check_bounds=(4, 4)):
    """``ν: D => W_D``; refuses dilators that fail the monotonicity check."""
    report = validate(D, *check_bounds)
    law = report.law("monotonicity")
    if not law.passed:
        raise NotMonotoneError(f"monotonicity fails: {law.counterexample}")
    return DilatorNat(D)


def nu_extend(nu, x):
    """``ν̄_X((a,σ)) = (a, ν_{|a|}(σ))``."""
    return ExtElem(x.support, nu(len(x.support), x.elem))


def theta_to_tw(system, universe, nu):
    """``f(ϑ^a_σ) = ∘(f[a], W(|f↾a|)(ν_{|a|}σ))`` as a memoized function."""
    memo = {}
    W = universe.W

    def f(t):
        if t not in memo:
            for s in t.args:
                f(s)
            x = nu_extend(nu, ExtElem(frozenset(t.args), t.payload))
            y = ext_map(W, f, system.le, universe.leq, x)
            memo[t] = universe.build(y.support, y.elem)
        return memo[t]

    return f


# -- ω^ω in Cantor normal form -----------------------------------------------------

@total_ordering
@dataclass(frozen=True)
class Cnf:
    """``ω^{n_0} + ... + ω^{n_{l-1}}`` with non-increasing exponents."""

    exps: tuple = ()

    def __post_init__(self):
        if any(not isinstance(e, int) or e < 0 for e in self.exps):
            raise ValueError(f"exponents must be naturals: {self.exps}")
        if any(x < y for x, y in zip(self.exps, self.exps[1:])):
            raise ValueError(f"exponents must be non-increasing: {self.exps}")

    def __lt__(self, other):
        # lexicographic with a proper prefix below: exactly tuple order
        return self.exps < other.exps

    def __add__(self, other):
        return cnf_add(self, other)

    def __repr__(self):
        return "(cnf" + "".join(f" {e}" for e in self.exps) + ")"


def omega(k):
    return Cnf((k,))


def cnf_compare(a, b):
    return (a.exps > b.exps) - (a.exps < b.exps)


def cnf_add(a, b):
    if not b.exps:
        return a
    keep = next((i for i, m in enumerate(a.exps) if m < b.exps[0]), len(a.exps))
    return Cnf(a.exps[:keep] + b.exps)


def monotonicity_witness(f, g):
    """``(h, h')`` with ``h ∘ g = h' ∘ h ∘ f`` for increasing ``f <= g`` (image tuples).

    ``h(k) = ω^k``; ``h'`` replaces the leading ``ω^{f(e)}`` by ``ω^{g(e)}``
    where ``e`` is the last index with ``ω^{f(e)} <= α``.
    """
    m = len(f)
    if m == 0 or len(g) != m:
        raise ValueError("need two maps with the same non-empty domain")
    if any(x > y for x, y in zip(f, g)):
        raise ValueError(f"{f} is not pointwise below {g}")

    def h(k):
        return omega(k)

    def h_prime(alpha):
        if omega(f[0]) > alpha:
            return alpha
        e = max(i for i in range(m) if omega(f[i]) <= alpha)
        rest = Cnf(alpha.exps[1:]) if alpha.exps[0] == f[e] else alpha
        return omega(g[e]) + rest

    return h, h_prime


def cnfs(max_exp, max_len):
    """All CNFs with exponents ``< max_exp`` and at most ``max_len`` terms."""
    out = []
    for n in range(max_len + 1):
        for combo in combinations(range(max_exp + n - 1), n):
            # stars and bars: non-increasing sequences from combinations
            exps = tuple(sorted((c - i for i, c in enumerate(combo)), reverse=True))
            out.append(Cnf(exps))
    return sorted(set(out))
