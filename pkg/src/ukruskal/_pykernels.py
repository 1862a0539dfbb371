"""Pure-Python implementations of the matrix kernels.

Every function takes relation matrices as 2-D ``numpy.uint8`` arrays
(``M[i, j] == 1`` meaning ``i <= j``) and mirrors the signature of the
compiled module ``_ckernels`` exactly.
"""

from itertools import permutations

import numpy as np


def reflexivity_violation(M):
    n = M.shape[0]
    for i in range(n):
        if not M[i, i]:
            return (i,)
    return None


def antisymmetry_violation(M):
    n = M.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if M[i, j] and M[j, i]:
                return (i, j)
    return None


def transitivity_violation(M):
    n = M.shape[0]
    rows = [np.flatnonzero(M[i]) for i in range(n)]
    for i in range(n):
        row_i = M[i]
        for j in rows[i]:
            for k in rows[j]:
                if not row_i[k]:
                    return (i, int(j), int(k))
    return None


def canonical_labeling(S):
    """Relabeling minimizing the strict-order matrix read row-major.

    Returns ``order`` with ``order[new] = old``; among minimizers the
    lexicographically smallest ``order`` wins.
    """
    n = S.shape[0]
    rows = [[int(S[i, j]) for j in range(n)] for i in range(n)]
    best = None
    best_order = None
    for order in permutations(range(n)):
        bits = [rows[order[i]][order[j]] for i in range(n) for j in range(n)]
        if best is None or bits < best:
            best = bits
            best_order = order
    return tuple(best_order) if best_order is not None else ()


def hig_witnesses(M):
    """All strictly increasing ``h`` with ``M[i, h(i)]`` for every ``i``, in lex order."""
    m, n = M.shape
    out = []
    h = [0] * m

    def extend(i, lo):
        if i == m:
            out.append(tuple(h))
            return
        # leave room for the remaining m - i - 1 entries
        for j in range(lo, n - (m - i - 1)):
            if M[i, j]:
                h[i] = j
                extend(i + 1, j + 1)

    extend(0, 0)
    return out


def hig_min(M):
    """Greedy witness: each entry goes to the least admissible position."""
    m, n = M.shape
    h = []
    j = 0
    for i in range(m):
        while j < n and not M[i, j]:
            j += 1
        if j == n:
            return None
        h.append(j)
        j += 1
    return tuple(h)


def longest_bad(M, cap):
    """Depth-first search for a longest bad sequence in a finite order.

    A bad sequence has ``not M[x_i, x_j]`` for all ``i < j``; with ``M``
    reflexive no element can repeat.  Returns ``(length, witness, exhaustive)``.
    """
    n = M.shape[0]
    cap = min(cap, n)
    above = M.sum(axis=1)  # number of elements >= x
    best = [0, []]
    seq = []

    def dfs(cands):
        if len(seq) > best[0]:
            best[0] = len(seq)
            best[1] = list(seq)
        if best[0] >= cap:
            return True
        if len(seq) + len(cands) <= best[0]:
            return False
        # maximal elements first: a reverse linear extension is bad
        for x in sorted(cands, key=lambda c: (above[c], c)):
            seq.append(x)
            done = dfs([z for z in cands if z != x and not M[x, z]])
            seq.pop()
            if done:
                return True
        return False

    dfs(list(range(n)))
    # stopping at the cap only proves optimality when the cap is |universe|
    exhaustive = best[0] < cap or cap == n
    return best[0], best[1], exhaustive
