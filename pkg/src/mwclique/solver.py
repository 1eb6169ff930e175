"""Search configuration, run driver and results.

Five wirings of the same local-move loop are exposed as modes:

    trsc                freed-by tabu, scenario hash, restart on revisit
    trsc_no_restart     ablation: scenarios are marked but never acted on
    trsc_solution_hash  ablation: hash covers the clique only
    lscc                configuration checking, periodic restarts
    scc_no_restart      configuration checking, no restarts

Runs are driven in chunks through a stepping handle (SearchRun) so callers
can inspect full state at any step boundary; run_search adds budgets and
timing on top.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _engine
from ._engine import (
    ALGO_LSCC,
    ALGO_TRSC,
    CS_STEP,
    HASH_SCENARIO,
    HASH_SOLUTION,
    RC_MARKFULL,
    RESTART_NONE,
    RESTART_PERIODIC,
    RESTART_SCENARIO,
    ST_BESTSTEP,
    ST_BESTW,
    ST_CONSTRUCTIONS,
    ST_FIRSTV,
    ST_MARKHITS,
    ST_MARKS,
    ST_RESTARTS,
    ST_RESTARTS_AT_BEST,
    TABU_FRU,
    TABU_SCC,
)
from .graph import WeightedGraph
from .scenario_hash import DEFAULT_PRIME, MarkTable, ScenarioHash
from .state import CliqueState
from .tabu import FruState, SccState

MODES = {
    "trsc": (ALGO_TRSC, TABU_FRU, HASH_SCENARIO, RESTART_SCENARIO),
    "trsc_no_restart": (ALGO_TRSC, TABU_FRU, HASH_SCENARIO, RESTART_NONE),
    "trsc_solution_hash": (ALGO_TRSC, TABU_FRU, HASH_SOLUTION, RESTART_SCENARIO),
    "lscc": (ALGO_LSCC, TABU_SCC, HASH_SOLUTION, RESTART_PERIODIC),
    "scc_no_restart": (ALGO_LSCC, TABU_SCC, HASH_SOLUTION, RESTART_NONE),
}

_CHUNK = 4096
_UNBOUNDED = 1 << 62


@dataclass
class SolverConfig:
    """Everything a run needs besides the graph.

    At least one of max_steps / cutoff_seconds must be set.  Runs bounded
    by max_steps alone are bit-reproducible for a given seed.
    """

    mode: str = "trsc"
    seed: int = 1
    max_steps: int | None = None
    cutoff_seconds: float | None = None
    restart_period: int = 4000
    prime: int = DEFAULT_PRIME
    mark_store: str = "bitset"
    restart_sweep_locks: bool = True
    first_vertex: int | None = None

    def validate(self, graph: WeightedGraph) -> None:
        if self.mode not in MODES:
            raise ValueError(
                f"unknown mode {self.mode!r}; choose from {sorted(MODES)}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed!r}")
        if self.max_steps is None and self.cutoff_seconds is None:
            raise ValueError("set max_steps, cutoff_seconds, or both")
        if self.max_steps is not None and self.max_steps < 0:
            raise ValueError(f"max_steps must be >= 0, got {self.max_steps}")
        if self.cutoff_seconds is not None and self.cutoff_seconds <= 0:
            raise ValueError(
                f"cutoff_seconds must be positive, got {self.cutoff_seconds}")
        if self.restart_period < 1:
            raise ValueError(
                f"restart_period must be >= 1, got {self.restart_period}")
        if self.first_vertex is not None and not 1 <= self.first_vertex <= graph.n:
            raise ValueError(
                f"first_vertex {self.first_vertex} out of range 1..{graph.n}")
        # prime and mark_store are validated where they are consumed
        ScenarioHash(1, 0, p=self.prime, mode="solution")
        MarkTable(self.prime, self.mark_store)


@dataclass
class SolverResult:
    mode: str
    seed: int
    best_weight: int
    best_clique: tuple[int, ...]
    steps: int
    steps_to_best: int
    time_to_best: float | None
    restarts: int
    restarts_at_best: int
    restart_period_avg: float | None
    marked_scenarios: int
    mark_hits: int
    constructions: int
    elapsed_seconds: float


class SearchRun:
    """A single in-progress run that can be advanced step by step.

    All live state (clique, tabu arrays, hash, statistics) is exposed so
    tests can assert invariants at any step boundary; advance_to drives
    the jitted loop and transparently grows the sparse mark table when it
    fills up.
    """

    def __init__(self, graph: WeightedGraph, config: SolverConfig):
        config.validate(graph)
        self.graph = graph
        self.config = config
        algo, tabu, hash_mode, restart = MODES[config.mode]

        mode_name = "scenario" if hash_mode == HASH_SCENARIO else "solution"
        self.shash = ScenarioHash(graph.n, graph.m, p=config.prime,
                                  mode=mode_name)
        self.clique = CliqueState(graph)
        self.fru = FruState(graph, self.shash)
        self.scc = SccState(graph)
        self.marks = MarkTable(config.prime, config.mark_store)
        self.rng = _engine.seed_rng(config.seed)
        self.best_clique_flags = np.zeros(graph.n + 1, dtype=np.uint8)
        self.stats = np.zeros(_engine.NSTATS, dtype=np.int64)
        if config.first_vertex is not None:
            self.stats[ST_FIRSTV] = config.first_vertex
        self.prm = np.array([
            graph.n, graph.m, self.shash.p, algo, tabu, hash_mode, restart,
            config.restart_period, 1 if config.restart_sweep_locks else 0,
            self.marks.store_code,
        ], dtype=np.int64)

    def _engine_args(self):
        g, c, f = self.graph, self.clique, self.fru
        return (g.indptr, g.nbr, g.eid, g.weights,
                c.in_clique, c.cnt_adj, c.sum_adj, c.last_flip, c.cscal,
                f.free, f.unlocker, f.unlocker_eid, self.scc.conf,
                self.shash.hval, self.shash.pow2,
                self.marks.bits, self.marks.keys, self.marks.meta,
                self.best_clique_flags, self.rng, self.stats, self.prm)

    @property
    def step(self) -> int:
        return int(self.clique.cscal[CS_STEP])

    @property
    def best_weight(self) -> int:
        return int(self.stats[ST_BESTW])

    @property
    def restarts(self) -> int:
        return int(self.stats[ST_RESTARTS])

    @property
    def marked_scenarios(self) -> int:
        return int(self.stats[ST_MARKS])

    @property
    def mark_hits(self) -> int:
        return int(self.stats[ST_MARKHITS])

    def best_clique(self) -> tuple[int, ...]:
        return tuple(int(v) for v in range(1, self.graph.n + 1)
                     if self.best_clique_flags[v])

    def advance_to(self, stop_at: int) -> None:
        """Run whole local-move iterations until the step counter reaches
        stop_at.  Tabu-mode iterations cost exactly one step, so they stop
        right at the boundary; configuration-checking modes also charge one
        step per constructed vertex and may overshoot by a construction."""
        while True:
            rc = _engine.run_steps(*self._engine_args(), stop_at)
            if rc != RC_MARKFULL:
                return
            self.marks.grow()

    def advance(self, steps: int = 1) -> None:
        self.advance_to(self.step + steps)

    def result(self, *, time_to_best: float | None = None,
               elapsed_seconds: float = 0.0) -> SolverResult:
        clique = self.best_clique()
        _revalidate(self.graph, clique, self.best_weight)
        restarts = self.restarts
        period_avg = self.step / restarts if restarts > 0 else None
        return SolverResult(
            mode=self.config.mode,
            seed=self.config.seed,
            best_weight=self.best_weight,
            best_clique=clique,
            steps=self.step,
            steps_to_best=int(self.stats[ST_BESTSTEP]),
            time_to_best=time_to_best,
            restarts=restarts,
            restarts_at_best=int(self.stats[ST_RESTARTS_AT_BEST]),
            restart_period_avg=period_avg,
            marked_scenarios=self.marked_scenarios,
            mark_hits=self.mark_hits,
            constructions=int(self.stats[ST_CONSTRUCTIONS]),
            elapsed_seconds=elapsed_seconds,
        )


def _revalidate(graph: WeightedGraph, clique: tuple[int, ...],
                claimed_weight: int) -> None:
    """Final safety net: the reported clique must really be one and must
    really weigh what the incremental counters say."""
    members = list(clique)
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if not graph.has_edge(u, v):
                raise RuntimeError(
                    f"internal error: reported set is not a clique "
                    f"({u} and {v} are not adjacent)")
    total = sum(int(graph.weights[v]) for v in members)
    if total != claimed_weight:
        raise RuntimeError(
            f"internal error: reported weight {claimed_weight} != "
            f"recomputed {total}")


def run_search(graph: WeightedGraph, config: SolverConfig) -> SolverResult:
    """Run one configured search to its budget and package the result.

    time_to_best is wall-clock and only reported for pure cutoff runs;
    step-bounded runs return None there so their results stay
    bit-identical across machines.
    """
    run = SearchRun(graph, config)
    deterministic = config.max_steps is not None
    stop = config.max_steps if deterministic else _UNBOUNDED
    t0 = time.perf_counter()
    time_to_best: float | None = None
    last_best = run.best_weight
    while run.step < stop:
        run.advance_to(min(run.step + _CHUNK, stop))
        now = time.perf_counter()
        if run.best_weight > last_best:
            last_best = run.best_weight
            time_to_best = now - t0
        if (config.cutoff_seconds is not None
                and now - t0 >= config.cutoff_seconds):
            break
    elapsed = time.perf_counter() - t0
    return run.result(time_to_best=None if deterministic else time_to_best,
                      elapsed_seconds=elapsed)


def select_best(results: Iterable[SolverResult]) -> SolverResult:
    """Best of several runs: heaviest clique, ties to fewer steps-to-best,
    then lower seed so reruns pick the same winner."""
    pool = list(results)
    if not pool:
        raise ValueError("no results to select from")
    return min(pool, key=lambda r: (-r.best_weight, r.steps_to_best, r.seed))
