"""Shared test utilities: seeded random instances and state gathering."""

from __future__ import annotations

import random

from mwclique import WeightedGraph
from mwclique.graph import mod200_weights


def random_graph(rng: random.Random, n: int, density: float,
                 weights=None) -> WeightedGraph:
    """Erdos-Renyi style instance; weights default to the index rule."""
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < density]
    if weights is None:
        weights = mod200_weights(n)
    return WeightedGraph(n, edges, weights)


def gather_scenario(run):
    """Snapshot (clique, free set, unlocking tuples) from a SearchRun."""
    return (run.clique.members(), run.fru.free_set(), run.fru.unlocking())
