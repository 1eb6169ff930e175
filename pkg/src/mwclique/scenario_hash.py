"""Incremental hashing of search scenarios, and the mark table keyed by it.

A scenario is the triple (clique, free set, recorded unlocking tuples).
Each component owns a disjoint block of exponents of 2 modulo a prime p:

    clique member v_i        -> 2^i
    free vertex v_i          -> 2^(n+i)
    unlocking (v_i, v_j) e_k -> 2^(2n+1+k) if i < j else 2^(2n+m+1+k)

so every elementary state change is a single add or subtract of a cached
power.  In solution mode only the clique block exists; free and unlocking
toggles are accepted and ignored, which is what makes the ablation a
drop-in replacement.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from . import _engine
from ._engine import HASH_SCENARIO, HASH_SOLUTION, MARK_BITSET, MARK_SPARSE
from .graph import WeightedGraph

DEFAULT_PRIME = 1_000_000_007

# primes up to 31 bits keep every modular sum inside int64 with room to spare
MAX_PRIME = 2**31

_MODE_CODES = {"scenario": HASH_SCENARIO, "solution": HASH_SOLUTION}


def _check_prime_range(p: int) -> int:
    p = int(p)
    if not 2 < p < MAX_PRIME:
        raise ValueError(f"prime must be in (2, 2^31), got {p}")
    return p


class ScenarioHash:
    """Maintains h(scenario) mod p under single-element toggles."""

    def __init__(self, n: int, m: int, *, p: int = DEFAULT_PRIME,
                 mode: str = "scenario"):
        if mode not in _MODE_CODES:
            raise ValueError(f"mode must be 'scenario' or 'solution', got {mode!r}")
        self.n = int(n)
        self.m = int(m)
        self.p = _check_prime_range(p)
        self.mode = mode
        self.mode_code = _MODE_CODES[mode]
        max_exp = 2 * self.n + 2 * self.m if mode == "scenario" else self.n
        self.pow2 = np.empty(max_exp + 1, dtype=np.int64)
        _engine.pow2_fill(self.pow2, self.p)
        self.pow2.setflags(write=False)
        self.hval = np.zeros(1, dtype=np.int64)
        if mode == "scenario":
            # initial scenario: C empty, every vertex free, no unlockings
            total = 0
            for v in range(1, self.n + 1):
                total += int(self.pow2[self.n + v])
            self.hval[0] = total % self.p

    @property
    def value(self) -> int:
        return int(self.hval[0])

    def toggle_clique(self, v: int, insert: bool = True) -> None:
        self._check_vertex(v)
        _engine.hash_toggle_clique(self.hval, self.pow2, self.p, v, insert)

    def toggle_free(self, v: int, insert: bool = True) -> None:
        self._check_vertex(v)
        _engine.hash_toggle_free(self.hval, self.pow2, self.p, self.mode_code,
                                 self.n, v, insert)

    def unlock_insert(self, i: int, j: int, e: int) -> None:
        self._check_pair(i, j, e)
        _engine.hash_unlock_pair(self.hval, self.pow2, self.p, self.mode_code,
                                 self.n, self.m, i, j, e, True)

    def unlock_delete(self, i: int, j: int, e: int) -> None:
        self._check_pair(i, j, e)
        _engine.hash_unlock_pair(self.hval, self.pow2, self.p, self.mode_code,
                                 self.n, self.m, i, j, e, False)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def _check_pair(self, i: int, j: int, e: int) -> None:
        self._check_vertex(i)
        self._check_vertex(j)
        if i == j:
            raise ValueError("unlocking tuple needs two distinct vertices")
        if not 0 <= e < self.m:
            raise ValueError(f"edge id {e} out of range 0..{self.m - 1}")


def recompute_full(graph: WeightedGraph, clique: Iterable[int],
                   free: Iterable[int],
                   unlocking: Iterable[tuple[int, int]], *,
                   p: int = DEFAULT_PRIME, mode: str = "scenario") -> int:
    """Hash a scenario from scratch with pow(2, e, p) and fresh edge-id
    lookups; independent of the cached power table and eid cache, so the
    tests can pit it against the incremental value after any move burst.
    """
    if mode not in _MODE_CODES:
        raise ValueError(f"mode must be 'scenario' or 'solution', got {mode!r}")
    p = _check_prime_range(p)
    n, m = graph.n, graph.m
    total = 0
    for v in clique:
        total += pow(2, v, p)
    if mode == "solution":
        return total % p
    for v in free:
        total += pow(2, n + v, p)
    for i, j in unlocking:
        e = graph.edge_id(i, j)
        exp = 2 * n + 1 + e if i < j else 2 * n + m + 1 + e
        total += pow(2, exp, p)
    return total % p


class MarkTable:
    """Set of already-visited hash values.

    The bitset store spends p bits once and answers in O(1); the sparse
    store is open addressing over h+1 keys (0 means empty) and doubles
    itself whenever it reaches half load.
    """

    _INITIAL_SPARSE = 1 << 16

    def __init__(self, p: int = DEFAULT_PRIME, store: str = "bitset"):
        if store not in ("bitset", "sparse"):
            raise ValueError(f"store must be 'bitset' or 'sparse', got {store!r}")
        self.p = _check_prime_range(p)
        self.store = store
        self.store_code = MARK_BITSET if store == "bitset" else MARK_SPARSE
        if store == "bitset":
            self.bits = np.zeros((self.p + 63) // 64, dtype=np.int64)
            self.keys = np.zeros(1, dtype=np.int64)
        else:
            self.bits = np.zeros(1, dtype=np.int64)
            self.keys = np.zeros(self._INITIAL_SPARSE, dtype=np.int64)
        self.meta = np.zeros(1, dtype=np.int64)
        self._count = 0

    @property
    def count(self) -> int:
        return self._count

    def is_marked(self, h: int) -> bool:
        self._check(h)
        return bool(_engine.mark_is_marked(self.store_code, self.bits,
                                           self.keys, h))

    def mark(self, h: int) -> bool:
        """Mark h; returns True if it was new."""
        self._check(h)
        rc = _engine.mark_set(self.store_code, self.bits, self.keys,
                              self.meta, h)
        if rc == 2:
            return False
        self._count += 1
        if rc == 1:
            self.grow()
        return True

    def grow(self) -> None:
        """Double the sparse table and rehash; no-op for the bitset."""
        if self.store != "sparse":
            return
        old = self.keys
        self.keys = np.zeros(2 * old.shape[0], dtype=np.int64)
        self.meta[0] = 0
        for key in old:
            if key != 0:
                _engine.mark_set(self.store_code, self.bits, self.keys,
                                 self.meta, int(key) - 1)

    def _check(self, h: int) -> None:
        if not 0 <= h < self.p:
            raise ValueError(f"hash value {h} out of range 0..{self.p - 1}")
