"""Micro-benchmark for the per-move update cost.

The clique state uses the neighbor-based scheme: every vertex keeps
|N(v) ∩ C| (cnt_adj) and the index sum of its clique neighbors (sum_adj),
both updated by iterating N(v) of the moved vertex, so one add or drop
costs O(deg(v)) regardless of n.  This script checks that claim directly
on the jitted kernels:

  * constant average degree, growing n  -> per-move time stays flat;
  * constant n, growing average degree -> per-move time grows with it.

Run as: python3 benchmarks/update_cost.py [--seed S] [--samples K]
Exits 1 if either trend is violated.
"""

import argparse
import random
import sys
import time

import numpy as np
from numba import njit

from mwclique import WeightedGraph
from mwclique._engine import clique_add, clique_drop
from mwclique.state import CliqueState


@njit(cache=True)
def _churn(indptr, nbr, w, in_clique, cnt_adj, sum_adj, last_flip, cscal,
           verts, repeats):
    for _ in range(repeats):
        for i in range(verts.shape[0]):
            v = verts[i]
            clique_add(indptr, nbr, w, in_clique, cnt_adj, sum_adj,
                       last_flip, cscal, v)
            clique_drop(indptr, nbr, w, in_clique, cnt_adj, sum_adj,
                        last_flip, cscal, v)


def make_graph(rng: random.Random, n: int, avg_deg: int) -> WeightedGraph:
    """Sparse random graph with roughly avg_deg incidences per vertex."""
    edges = set()
    for v in range(1, n + 1):
        for _ in range(avg_deg // 2):
            u = rng.randint(1, n)
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return WeightedGraph(n, sorted(edges), [1] * n)


def per_move_ns(graph: WeightedGraph, rng: random.Random, samples: int) -> float:
    state = CliqueState(graph)
    verts = np.array(rng.sample(range(1, graph.n + 1), samples),
                     dtype=np.int64)
    # size the run so every configuration walks a comparable number of
    # adjacency entries, keeping elapsed time well above timer noise
    mean_deg = max(1, graph.m * 2 // graph.n)
    repeats = max(4, 8_000_000 // (samples * mean_deg))
    args = (graph.indptr, graph.nbr, graph.weights, state.in_clique,
            state.cnt_adj, state.sum_adj, state.last_flip, state.cscal)
    _churn(*args, verts[:2], 1)  # jit warm-up
    t0 = time.perf_counter()
    _churn(*args, verts, repeats)
    elapsed = time.perf_counter() - t0
    return elapsed / (2 * repeats * samples) * 1e9


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--samples", type=int, default=256,
                    help="vertices churned per configuration")
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)

    print("constant degree (~64), growing n:")
    flat = []
    for n in (1000, 4000, 16000):
        g = make_graph(rng, n, 64)
        ns = per_move_ns(g, rng, min(args.samples, n))
        flat.append(ns)
        print(f"  n={n:>6}  m={g.m:>7}  {ns:8.1f} ns/move")

    print("constant n (4000), growing degree:")
    rising = []
    for deg in (16, 64, 256):
        g = make_graph(rng, 4000, deg)
        ns = per_move_ns(g, rng, min(args.samples, 4000))
        rising.append(ns)
        print(f"  deg~{deg:>4}  m={g.m:>7}  {ns:8.1f} ns/move")

    ok = True
    flat_ratio = flat[-1] / flat[0]
    print(f"n grew 16x, per-move cost grew {flat_ratio:.2f}x "
          f"(O(deg) predicts ~1x, O(n) would be ~16x)")
    if flat_ratio > 4.0:
        print("FAIL: per-move cost scales with n")
        ok = False
    rise_ratio = rising[-1] / rising[0]
    print(f"degree grew 16x, per-move cost grew {rise_ratio:.2f}x "
          f"(O(deg) predicts ~16x)")
    if rise_ratio < 4.0:
        print("FAIL: per-move cost does not follow the degree")
        ok = False
    print("ok: per-move update cost is O(deg(v))" if ok else "FAILED")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
