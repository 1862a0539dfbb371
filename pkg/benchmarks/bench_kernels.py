"""Time the compiled kernels against the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]``.
Inputs are random orders (transitive closures of random DAGs), so every
kernel sees realistic matrices; results are checked for equality first.
"""

import argparse
import random
import sys
import timeit

import numpy as np

from ukruskal import _pykernels

try:
    from ukruskal import _ckernels
except ImportError:
    _ckernels = None


def random_order(rng, n, p=0.3):
    M = np.eye(n, dtype=np.uint8)
    for i in range(n):
        for j in range(i + 1, n):
            M[i, j] = rng.random() < p
    for k in range(n):  # Warshall
        M |= np.outer(M[:, k], M[k, :]).astype(np.uint8)
    perm = rng.sample(range(n), n)
    return np.ascontiguousarray(M[np.ix_(perm, perm)])


def random_rect(rng, m, n, p=0.5):
    return np.ascontiguousarray((np.array([[rng.random() < p for _ in range(n)]
                                           for _ in range(m)])).astype(np.uint8))


def cases(rng):
    orders = [random_order(rng, 40) for _ in range(5)]
    small = [random_order(rng, 7) for _ in range(5)]
    strict = [np.ascontiguousarray(S - np.eye(7, dtype=np.uint8)) for S in small]
    rects = [random_rect(rng, 5, 12) for _ in range(5)]
    bad = [random_order(rng, 22, 0.15) for _ in range(3)]
    return [
        ("transitivity_violation n=40", lambda k: [k.transitivity_violation(M) for M in orders]),
        ("canonical_labeling n=7", lambda k: [k.canonical_labeling(S) for S in strict]),
        ("hig_witnesses 5x12", lambda k: [k.hig_witnesses(M) for M in rects]),
        ("hig_min 5x12", lambda k: [k.hig_min(M) for M in rects]),
        ("longest_bad n=22", lambda k: [k.longest_bad(M, 22) for M in bad]),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1
    rng = random.Random(args.seed)
    print(f"{'kernel':32s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, run in cases(rng):
        want, got = run(_pykernels), run(_ckernels)
        if _norm(want) != _norm(got):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        py = min(timeit.repeat(lambda: run(_pykernels), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: run(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:32s} {py * 1e3:10.2f} {cy * 1e3:10.2f} {py / cy:7.1f}x")
    return 0


def _norm(x):
    # lists and tuples compare equal across backends
    if isinstance(x, (list, tuple)):
        return [_norm(y) for y in x]
    if isinstance(x, np.integer):
        return int(x)
    return x


if __name__ == "__main__":
    sys.exit(main())
