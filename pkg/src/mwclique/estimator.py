"""Estimator-style front end over the search modes.

MaxWeightCliqueSearch follows the familiar fit/predict conventions: all
settings are constructor parameters, fit runs the configured number of
searches and stores what it found in trailing-underscore attributes, and
fit_predict returns a boolean membership mask aligned with the input's
vertex order.  get_params/set_params/clone work as usual.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from ._validation import as_graph
from .scenario_hash import DEFAULT_PRIME
from .solver import SolverConfig, run_search, select_best


class MaxWeightCliqueSearch(BaseEstimator):
    """Stochastic local search for a heaviest clique.

    Parameters
    ----------
    mode : one of "trsc", "trsc_no_restart", "trsc_solution_hash",
        "lscc", "scc_no_restart".
    n_runs : independent runs with seeds seed, seed+1, ...; the heaviest
        result wins (ties: fewer steps to best, then lower seed).
    max_steps, cutoff_seconds : per-run budget; at least one is required.
        Step-bounded runs are reproducible for a given seed.
    restart_period : period of the forced restarts in "lscc" mode.
    prime : modulus of the visited-state hash.
    mark_store : "bitset" or "sparse" storage for visited hashes.
    restart_sweep_locks : whether a restart sweep locks the swept
        vertices (the documented behavior) or merely empties the clique.

    Attributes (after fit)
    ----------------------
    best_weight_ : weight of the heaviest clique found.
    best_clique_ : its vertices, ascending 1-based tuple.
    result_ : the winning run's full SolverResult.
    results_ : every run's SolverResult, in seed order.
    n_vertices_ : number of vertices of the fitted graph.
    """

    def __init__(self, mode: str = "trsc", n_runs: int = 1, seed: int = 1,
                 max_steps: int | None = None,
                 cutoff_seconds: float | None = None,
                 restart_period: int = 4000, prime: int = DEFAULT_PRIME,
                 mark_store: str = "bitset",
                 restart_sweep_locks: bool = True):
        self.mode = mode
        self.n_runs = n_runs
        self.seed = seed
        self.max_steps = max_steps
        self.cutoff_seconds = cutoff_seconds
        self.restart_period = restart_period
        self.prime = prime
        self.mark_store = mark_store
        self.restart_sweep_locks = restart_sweep_locks

    def fit(self, X, y=None, weights=None):
        """Search the graph X (WeightedGraph or 0/1 adjacency matrix)."""
        if not isinstance(self.n_runs, int) or self.n_runs < 1:
            raise ValueError(f"n_runs must be a positive integer, got {self.n_runs!r}")
        graph = as_graph(X, weights)
        results = []
        for k in range(self.n_runs):
            config = SolverConfig(
                mode=self.mode,
                seed=self.seed + k,
                max_steps=self.max_steps,
                cutoff_seconds=self.cutoff_seconds,
                restart_period=self.restart_period,
                prime=self.prime,
                mark_store=self.mark_store,
                restart_sweep_locks=self.restart_sweep_locks,
            )
            results.append(run_search(graph, config))
        winner = select_best(results)
        self.results_ = results
        self.result_ = winner
        self.best_weight_ = winner.best_weight
        self.best_clique_ = winner.best_clique
        self.n_vertices_ = graph.n
        return self

    def fit_predict(self, X, y=None, weights=None) -> np.ndarray:
        """Fit, then return a boolean mask: entry i is True iff vertex
        i+1 belongs to the best clique found."""
        self.fit(X, y=y, weights=weights)
        mask = np.zeros(self.n_vertices_, dtype=bool)
        for v in self.best_clique_:
            mask[v - 1] = True
        return mask

    def score(self, X=None, y=None) -> float:
        """Weight of the best clique from the last fit."""
        if not hasattr(self, "best_weight_"):
            raise AttributeError("call fit before score")
        return float(self.best_weight_)
