"""Stochastic local search for the maximum weight clique problem."""

from .estimator import MaxWeightCliqueSearch
from .graph import GraphError, WeightedGraph, complement, mod200_weights, parse_instance
from .oracle import enumerate_exact, solve_exact
from .scenario_hash import DEFAULT_PRIME, MarkTable, ScenarioHash, recompute_full
from .solver import MODES, SearchRun, SolverConfig, SolverResult, run_search, select_best
from .state import CliqueState

__version__ = "0.1.0"

__all__ = [
    "CliqueState",
    "DEFAULT_PRIME",
    "GraphError",
    "MarkTable",
    "MaxWeightCliqueSearch",
    "MODES",
    "ScenarioHash",
    "SearchRun",
    "SolverConfig",
    "SolverResult",
    "WeightedGraph",
    "complement",
    "enumerate_exact",
    "mod200_weights",
    "parse_instance",
    "recompute_full",
    "run_search",
    "select_best",
    "solve_exact",
    "__version__",
]
