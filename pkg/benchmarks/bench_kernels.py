"""Compiled kernels against their interpreted twins.

    python benchmarks/bench_kernels.py [--repeat N] [--seed S]

Each kernel runs once untimed (compilation), then best-of-N is reported for
the compiled version and for ``.py_func``.  Outputs are compared so a fast
but wrong kernel shows up here too.  Under CGWC_DISABLE_JIT=1 both columns
time the same interpreted code.
"""

import argparse
import itertools
import random
import time

import numpy as np

from cgwc import kernels
from cgwc._jit import backend
from cgwc.graph import WeightedGraph


def random_graph(rng, n, density, weights=(1, 2, 3)):
    while True:
        g = WeightedGraph.from_edges(n, [(u, v, rng.choice(weights))
                                         for u, v in itertools.combinations(range(n), 2)
                                         if rng.random() < density])
        if g.is_connected():
            return g


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t)
    return best


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def cases(rng):
    g40 = random_graph(rng, 40, 0.3)
    g12 = random_graph(rng, 12, 0.4)
    g8 = random_graph(rng, 8, 0.5)
    m40 = np.ascontiguousarray(g40.matrix)
    m12 = np.ascontiguousarray(g12.matrix)
    m8 = np.ascontiguousarray(g8.matrix)
    eu, ev, ew = g12.edge_arrays
    fu, fv, fw = g8.edge_arrays
    return [
        ("stoer_wagner n=40", kernels.stoer_wagner, (m40,)),
        ("max_flow n=40", kernels.max_flow, (m40, 0, 39)),
        ("component_labels n=40", kernels.component_labels, (m40,)),
        ("enumerate_bonds n=12 p<=3", kernels.enumerate_bonds, (m12, eu, ev, ew, 3)),
        ("deletion_profiles n=8 k<=3", kernels.deletion_profiles, (m8, fu, fv, fw, 3, 3)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"backend: {backend()}")
    print(f"{'kernel':30s} {'compiled':>12s} {'interpreted':>12s} {'speedup':>9s}  agree")
    for name, fn, fargs in cases(rng):
        fn(*fargs)  # compile
        t_jit = best_of(fn, fargs, args.repeat)
        t_py = best_of(fn.py_func, fargs, max(1, args.repeat // 2))
        agree = same(fn(*fargs), fn.py_func(*fargs))
        print(f"{name:30s} {t_jit * 1e3:10.3f}ms {t_py * 1e3:10.3f}ms {t_py / t_jit:8.1f}x  {agree}")


if __name__ == "__main__":
    main()
