"""Term counts by size from generating functions, independent of any enumerator.

A term is a payload over a finite *set* of distinct smaller terms, so the
counts follow from ``T[n] = sum_k sum_p P(k, p) * E_k[n - p]`` where
``P(k, p)`` counts full-support payloads of size ``p`` over ``k`` labels and
``E_k[s]`` counts ``k``-element sets of distinct terms of total size ``s``.
"""

from math import comb


def surjections(n, k):
    # inclusion-exclusion
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))


def set_counts(T, kmax, smax):
    """``E[k][s]``: k-sets of distinct terms with total size s, given T[m] terms of size m."""
    E = [[0] * (smax + 1) for _ in range(kmax + 1)]
    E[0][0] = 1
    for m in range(1, smax + 1):
        if not T[m]:
            continue
        new = [row[:] for row in E]
        for k in range(kmax + 1):
            for s in range(smax + 1):
                if not E[k][s]:
                    continue
                for j in range(1, kmax - k + 1):
                    if s + j * m > smax:
                        break
                    new[k + j][s + j * m] += E[k][s] * comb(T[m], j)
        E = new
    return E


def term_counts(payloads, bound):
    """``T[0..bound]`` for payload counts ``payloads(k, p)``."""
    T = [0] * (bound + 1)
    for n in range(1, bound + 1):
        E = set_counts(T, n, n)
        T[n] = sum(payloads(k, p) * E[k][n - p]
                   for p in range(1, n + 1) for k in range(0, n - p + 1))
    return T


def _seq(k, p):
    # Higman payloads: the empty sequence weighs one atom
    if k == 0:
        return 1 if p == 1 else 0
    return surjections(p, k)


def w_z(z):
    """``1 + Z x X``: zero, or ``(z, leaf)`` weighing two atoms."""
    return lambda k, p: (k == 0 and p == 1) + (k == 1 and p == 2) * z


def w_a(z):
    """``Z x Seq(X)``: a constant and a sequence."""
    return lambda k, p: z * _seq(k, p - 1) if p >= 2 else 0


def one_plus_seq(k, p):
    return (k == 0 and p == 1) + _seq(k, p)


def sum_lex_one_id(k, p):
    return int(p == 1 and k <= 1)


def one_plus_two_x_squared(k, p):
    # ``1 + 2 x X x X`` over a chain: (x, y) with {x, y} = k labels
    if p == 1:
        return int(k == 0)
    if p == 3:
        return {1: 2, 2: 2 * 2}.get(k, 0)
    return 0


def total(payloads, bound):
    return sum(term_counts(payloads, bound))

