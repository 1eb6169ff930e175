"""Tabu bookkeeping for the two search variants.

FruState implements the forbid-repeated-unlocking rule: adding v frees v
and every locked neighbor whose previous unlocker was a different vertex;
removal locks the removed vertex but leaves its unlocker record intact,
so the same neighbor cannot free it again until some other neighbor does.
The entering half of a swap never unlocks anything.

SccState is the configuration-checking rule used by the periodic-restart
baseline: adding v raises the flag of every neighbor, dropping or
swapping out a vertex clears only its own flag.
"""

from __future__ import annotations

import numpy as np

from . import _engine
from .graph import WeightedGraph
from .scenario_hash import ScenarioHash


class FruState:
    def __init__(self, graph: WeightedGraph, shash: ScenarioHash):
        if shash.n != graph.n or shash.m != graph.m:
            raise ValueError("hash was built for a different graph")
        self.graph = graph
        self.shash = shash
        n = graph.n
        self.free = np.ones(n + 1, dtype=np.uint8)
        self.free[0] = 0
        # unlocker 0 means "never unlocked"; the eid cache is only read
        # when an unlocker is recorded, so poison it with -1
        self.unlocker = np.zeros(n + 1, dtype=np.int64)
        self.unlocker_eid = np.full(n + 1, -1, dtype=np.int64)

    def is_free(self, v: int) -> bool:
        return bool(self.free[v])

    def free_set(self) -> set[int]:
        return {v for v in range(1, self.graph.n + 1) if self.free[v]}

    def unlocker_of(self, v: int) -> int | None:
        u = int(self.unlocker[v])
        return u if u != 0 else None

    def unlocking(self) -> set[tuple[int, int]]:
        """Recorded (locked-then-freed vertex, its unlocker) tuples."""
        return {(v, int(self.unlocker[v]))
                for v in range(1, self.graph.n + 1) if self.unlocker[v] != 0}

    def on_add(self, v: int) -> None:
        """Free v, unlock its eligible locked neighbors, and flip v's
        membership term in the hash (the full add-side effects)."""
        g, h = self.graph, self.shash
        _engine.fru_on_add(g.indptr, g.nbr, g.eid, self.free, self.unlocker,
                           self.unlocker_eid, h.hval, h.pow2, h.p,
                           h.mode_code, g.n, g.m, v)

    def on_remove(self, v: int) -> None:
        """Lock a vertex leaving the clique (drop, swap-out or sweep)."""
        h = self.shash
        _engine.fru_on_remove(self.free, h.hval, h.pow2, h.p, h.mode_code,
                              self.graph.n, v)


class SccState:
    def __init__(self, graph: WeightedGraph):
        self.graph = graph
        self.conf = np.ones(graph.n + 1, dtype=np.uint8)
        self.conf[0] = 0

    def is_eligible(self, v: int) -> bool:
        return bool(self.conf[v])

    def on_add(self, v: int) -> None:
        g = self.graph
        _engine.scc_on_add(g.indptr, g.nbr, self.conf, v)

    def on_drop(self, v: int) -> None:
        _engine.scc_on_lock(self.conf, v)

    def on_swap_out(self, v: int) -> None:
        _engine.scc_on_lock(self.conf, v)
