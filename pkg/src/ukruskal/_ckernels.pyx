# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled matrix kernels; see ``_pykernels`` for the reference semantics."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


def reflexivity_violation(const unsigned char[:, ::1] M):
    cdef Py_ssize_t i, n = M.shape[0]
    for i in range(n):
        if not M[i, i]:
            return (i,)
    return None


def antisymmetry_violation(const unsigned char[:, ::1] M):
    cdef Py_ssize_t i, j, n = M.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if M[i, j] and M[j, i]:
                return (i, j)
    return None


def transitivity_violation(const unsigned char[:, ::1] M):
    cdef Py_ssize_t i, j, k, n = M.shape[0]
    for i in range(n):
        for j in range(n):
            if not M[i, j]:
                continue
            for k in range(n):
                if M[j, k] and not M[i, k]:
                    return (i, j, k)
    return None


cdef bint _next_permutation(int* a, int n):
    cdef int i = n - 2, j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


def canonical_labeling(const unsigned char[:, ::1] S):
    cdef int n = S.shape[0]
    cdef int i, j, cmp
    if n == 0:
        return ()
    cdef int* order = <int*>malloc(n * sizeof(int))
    cdef int* best = <int*>malloc(n * sizeof(int))
    try:
        for i in range(n):
            order[i] = i
            best[i] = i
        # permutations arrive in lex order, so only strict improvements replace
        while _next_permutation(order, n):
            cmp = 0
            for i in range(n):
                for j in range(n):
                    if S[order[i], order[j]] != S[best[i], best[j]]:
                        cmp = -1 if S[order[i], order[j]] < S[best[i], best[j]] else 1
                        break
                if cmp != 0:
                    break
            if cmp < 0:
                for i in range(n):
                    best[i] = order[i]
        return tuple(best[i] for i in range(n))
    finally:
        free(order)
        free(best)


def hig_witnesses(const unsigned char[:, ::1] M):
    cdef int m = M.shape[0], n = M.shape[1]
    cdef int i, j
    out = []
    if m == 0:
        return [()]
    if m > n:
        return out
    cdef int* h = <int*>malloc(m * sizeof(int))
    try:
        i = 0
        h[0] = -1
        while i >= 0:
            # advance entry i to its next admissible position
            j = h[i] + 1
            while j <= n - (m - i) and not M[i, j]:
                j += 1
            if j > n - (m - i):
                i -= 1
                continue
            h[i] = j
            if i == m - 1:
                out.append(tuple(h[k] for k in range(m)))
            else:
                i += 1
                h[i] = j
        return out
    finally:
        free(h)


def hig_min(const unsigned char[:, ::1] M):
    cdef int m = M.shape[0], n = M.shape[1]
    cdef int i, j = 0
    h = []
    for i in range(m):
        while j < n and not M[i, j]:
            j += 1
        if j == n:
            return None
        h.append(j)
        j += 1
    return tuple(h)


cdef class _BadSearch:
    cdef const unsigned char[:, ::1] M
    cdef int n, cap, best_len
    cdef int* seq
    cdef int* best
    cdef long[:] above

    def __cinit__(self, const unsigned char[:, ::1] M, int cap, long[:] above):
        self.M = M
        self.n = M.shape[0]
        self.cap = cap
        self.above = above
        self.best_len = 0
        self.seq = <int*>malloc((self.n + 1) * sizeof(int))
        self.best = <int*>malloc((self.n + 1) * sizeof(int))

    def __dealloc__(self):
        free(self.seq)
        free(self.best)

    cdef bint dfs(self, int depth, int* cands, int nc):
        cdef int a, b, x, t, k, nn
        cdef int* nxt
        if depth > self.best_len:
            self.best_len = depth
            for k in range(depth):
                self.best[k] = self.seq[k]
        if self.best_len >= self.cap:
            return True
        if depth + nc <= self.best_len:
            return False
        # insertion sort by (above, index): maximal elements first
        for a in range(1, nc):
            x = cands[a]
            b = a - 1
            while b >= 0 and (self.above[cands[b]] > self.above[x] or
                              (self.above[cands[b]] == self.above[x] and cands[b] > x)):
                cands[b + 1] = cands[b]
                b -= 1
            cands[b + 1] = x
        nxt = <int*>malloc((nc + 1) * sizeof(int))
        try:
            for a in range(nc):
                x = cands[a]
                nn = 0
                for b in range(nc):
                    t = cands[b]
                    if t != x and not self.M[x, t]:
                        nxt[nn] = t
                        nn += 1
                self.seq[depth] = x
                if self.dfs(depth + 1, nxt, nn):
                    return True
            return False
        finally:
            free(nxt)


def longest_bad(const unsigned char[:, ::1] M, int cap):
    cdef int n = M.shape[0], i
    if cap > n:
        cap = n
    above = np.asarray(M).sum(axis=1).astype(np.int_)
    search = _BadSearch(M, cap, above)
    cdef int* cands = <int*>malloc((n + 1) * sizeof(int))
    try:
        for i in range(n):
            cands[i] = i
        search.dfs(0, cands, n)
    finally:
        free(cands)
    witness = [search.best[i] for i in range(search.best_len)]
    exhaustive = search.best_len < cap or cap == n
    return search.best_len, witness, exhaustive
