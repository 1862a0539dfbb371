"""Hypothesis strategies shared by the test modules."""

import numpy as np
from hypothesis import strategies as st

from ukruskal.finposet import FinPoset


@st.composite
def posets(draw, max_size=5):
    """Random finite orders: a shuffled transitive closure of a random DAG."""
    n = draw(st.integers(0, max_size))
    M = np.eye(n, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            M[i, j] = draw(st.booleans())
    for k in range(n):
        M |= np.outer(M[:, k], M[k, :])
    perm = draw(st.permutations(range(n)))
    names = draw(st.lists(st.integers(0, 50), min_size=n, max_size=n, unique=True))
    pairs = [(names[perm[i]], names[perm[j]]) for i in range(n) for j in range(n) if M[i, j]]
    return FinPoset.from_pairs(names, pairs)


@st.composite
def relation_matrices(draw, max_size=7):
    n = draw(st.integers(0, max_size))
    bits = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    return np.ascontiguousarray(np.array(bits, dtype=np.uint8).reshape(n, n))


@st.composite
def order_matrices(draw, max_size=8):
    p = draw(posets(max_size))
    return p.matrix()


@st.composite
def rect_matrices(draw, max_rows=4, max_cols=7):
    m = draw(st.integers(0, max_rows))
    n = draw(st.integers(0, max_cols))
    bits = draw(st.lists(st.booleans(), min_size=m * n, max_size=m * n))
    return np.ascontiguousarray(np.array(bits, dtype=np.uint8).reshape(m, n))
