"""Incremental clique state with O(deg) move updates.

For every vertex the state tracks how many clique members it is adjacent
to (cnt_adj) and the sum of their indices (sum_adj).  A vertex outside
the clique is an add candidate iff cnt_adj equals the clique size, and a
swap candidate iff it misses exactly one member; that unique member is
recovered as the difference between the clique index sum and sum_adj,
so no pair scan is ever needed.
"""

from __future__ import annotations

import numpy as np

from . import _engine
from ._engine import CS_IDXSUM, CS_SIZE, CS_STEP, CS_WEIGHT
from .graph import WeightedGraph


class CliqueState:
    """Current clique plus the per-vertex counters the moves maintain."""

    def __init__(self, graph: WeightedGraph):
        self.graph = graph
        n = graph.n
        self.in_clique = np.zeros(n + 1, dtype=np.uint8)
        self.cnt_adj = np.zeros(n + 1, dtype=np.int64)
        self.sum_adj = np.zeros(n + 1, dtype=np.int64)
        self.last_flip = np.zeros(n + 1, dtype=np.int64)
        self.cscal = np.zeros(_engine.NCSCAL, dtype=np.int64)

    @property
    def size(self) -> int:
        return int(self.cscal[CS_SIZE])

    @property
    def weight(self) -> int:
        return int(self.cscal[CS_WEIGHT])

    @property
    def index_sum(self) -> int:
        return int(self.cscal[CS_IDXSUM])

    @property
    def step(self) -> int:
        return int(self.cscal[CS_STEP])

    @step.setter
    def step(self, value: int) -> None:
        self.cscal[CS_STEP] = value

    def members(self) -> set[int]:
        return {v for v in range(1, self.graph.n + 1) if self.in_clique[v]}

    def contains(self, v: int) -> bool:
        return bool(self.in_clique[v])

    def missing_count(self, v: int) -> int:
        """Number of clique members v is not adjacent to (v outside C)."""
        return self.size - int(self.cnt_adj[v])

    def witness(self, v: int) -> int:
        """The unique clique member not adjacent to v; only meaningful
        when missing_count(v) == 1."""
        return self.index_sum - int(self.sum_adj[v])

    def age(self, v: int) -> int:
        return self.step - int(self.last_flip[v])

    def add(self, v: int) -> None:
        if self.in_clique[v]:
            raise ValueError(f"vertex {v} already in the clique")
        if self.cnt_adj[v] != self.size:
            raise ValueError(f"vertex {v} is not adjacent to the whole clique")
        _engine.clique_add(self.graph.indptr, self.graph.nbr, self.graph.weights,
                           self.in_clique, self.cnt_adj, self.sum_adj,
                           self.last_flip, self.cscal, v)

    def drop(self, v: int) -> None:
        if not self.in_clique[v]:
            raise ValueError(f"vertex {v} is not in the clique")
        _engine.clique_drop(self.graph.indptr, self.graph.nbr, self.graph.weights,
                            self.in_clique, self.cnt_adj, self.sum_adj,
                            self.last_flip, self.cscal, v)

    def swap(self, u: int, v: int) -> None:
        """Exchange clique member u for outside vertex v in one move."""
        if not self.in_clique[u]:
            raise ValueError(f"vertex {u} is not in the clique")
        if self.in_clique[v]:
            raise ValueError(f"vertex {v} already in the clique")
        if self.graph.has_edge(u, v):
            raise ValueError(f"{{{u},{v}}} is an edge; that exchange is an add")
        if self.missing_count(v) != 1 or self.witness(v) != u:
            raise ValueError(f"({u},{v}) is not a valid swap pair")
        _engine.clique_drop(self.graph.indptr, self.graph.nbr, self.graph.weights,
                            self.in_clique, self.cnt_adj, self.sum_adj,
                            self.last_flip, self.cscal, u)
        _engine.clique_add(self.graph.indptr, self.graph.nbr, self.graph.weights,
                           self.in_clique, self.cnt_adj, self.sum_adj,
                           self.last_flip, self.cscal, v)

    def add_candidates(self) -> set[int]:
        """S_add from the counters: empty clique yields the empty set."""
        if self.size == 0:
            return set()
        return {v for v in range(1, self.graph.n + 1)
                if not self.in_clique[v] and self.cnt_adj[v] == self.size}

    def swap_candidates(self) -> set[tuple[int, int]]:
        """S_swap as (member out, outsider in) pairs."""
        if self.size <= 1:
            return set()
        return {(self.witness(v), v) for v in range(1, self.graph.n + 1)
                if not self.in_clique[v] and self.cnt_adj[v] == self.size - 1}


def recompute_candidates_reference(graph: WeightedGraph,
                                   clique: set[int]) -> tuple[set, set]:
    """Definitional S_add / S_swap, straight from the set comprehensions.

    Used by the tests as an independent check of the counter-based
    candidate sets.
    """
    adj = graph.adjacency_sets()
    s_add: set[int] = set()
    s_swap: set[tuple[int, int]] = set()
    if len(clique) >= 1:
        for v in range(1, graph.n + 1):
            if v not in clique and clique <= adj[v]:
                s_add.add(v)
    if len(clique) >= 2:
        for u in clique:
            rest = clique - {u}
            for v in range(1, graph.n + 1):
                if v not in clique and v not in adj[u] and rest <= adj[v]:
                    s_swap.add((u, v))
    return s_add, s_swap
