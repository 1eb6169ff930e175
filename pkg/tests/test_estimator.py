import numpy as np
import pytest
from sklearn.base import clone

from mwclique import MaxWeightCliqueSearch, SolverResult


def example1_matrix(graph):
    A = np.zeros((graph.n, graph.n), dtype=int)
    for u in range(1, graph.n + 1):
        for v in graph.neighbors(u):
            A[u - 1, v - 1] = 1
    return A


def test_get_set_params_and_clone_round_trip():
    est = MaxWeightCliqueSearch(mode="lscc", n_runs=3, seed=7,
                                max_steps=123, restart_period=50)
    params = est.get_params()
    assert params["mode"] == "lscc"
    assert params["n_runs"] == 3
    assert params["restart_period"] == 50
    est.set_params(mode="trsc", seed=2)
    assert est.get_params()["mode"] == "trsc"
    assert est.get_params()["seed"] == 2
    twin = clone(est)
    assert twin.get_params() == est.get_params()
    assert not hasattr(twin, "best_weight_")


def test_fit_on_graph(example1):
    est = MaxWeightCliqueSearch(n_runs=2, seed=1, max_steps=5000)
    assert est.fit(example1) is est
    assert est.best_weight_ == 193
    assert est.best_clique_ == (3, 5, 6, 8)
    assert est.n_vertices_ == 9
    assert len(est.results_) == 2
    assert [r.seed for r in est.results_] == [1, 2]
    assert est.result_ in est.results_
    assert isinstance(est.result_, SolverResult)
    assert est.score() == 193.0


def test_fit_on_matrix_with_weights(example1):
    A = example1_matrix(example1)
    w = [10, 20, 3, 40, 50, 60, 70, 80, 90]
    est = MaxWeightCliqueSearch(seed=1, max_steps=5000).fit(A, weights=w)
    assert est.best_weight_ == 193
    assert est.best_clique_ == (3, 5, 6, 8)


def test_fit_on_matrix_defaults_to_unit_weights(example1):
    A = example1_matrix(example1)
    est = MaxWeightCliqueSearch(seed=1, max_steps=3000).fit(A)
    assert est.best_weight_ == 4  # several maximum cliques have four vertices
    assert len(est.best_clique_) == 4


def test_fit_predict_mask(example1):
    est = MaxWeightCliqueSearch(seed=1, max_steps=5000)
    mask = est.fit_predict(example1)
    assert mask.dtype == bool and mask.shape == (9,)
    assert [i + 1 for i in np.flatnonzero(mask)] == [3, 5, 6, 8]


def test_fit_is_reproducible(example1):
    a = MaxWeightCliqueSearch(n_runs=3, seed=5, max_steps=1000).fit(example1)
    b = MaxWeightCliqueSearch(n_runs=3, seed=5, max_steps=1000).fit(example1)
    assert a.best_clique_ == b.best_clique_
    assert [r.steps_to_best for r in a.results_] == \
        [r.steps_to_best for r in b.results_]


def test_score_before_fit_raises():
    with pytest.raises(AttributeError):
        MaxWeightCliqueSearch(max_steps=10).score()


def test_matrix_validation_errors():
    est = MaxWeightCliqueSearch(max_steps=10)
    with pytest.raises(ValueError, match="square"):
        est.fit(np.zeros((2, 3)))
    with pytest.raises(ValueError, match="0 or 1"):
        est.fit(np.full((2, 2), 2))
    with pytest.raises(ValueError, match="diagonal"):
        est.fit(np.eye(3, dtype=int))
    with pytest.raises(ValueError, match="symmetric"):
        est.fit(np.triu(np.ones((3, 3), dtype=int), k=1))
    with pytest.raises(ValueError, match="shape"):
        A = np.array([[0, 1], [1, 0]])
        est.fit(A, weights=[1, 2, 3])
    with pytest.raises(ValueError, match="at least one vertex"):
        est.fit(np.zeros((0, 0)))


def test_weights_rejected_with_graph_input(example1):
    est = MaxWeightCliqueSearch(max_steps=10)
    with pytest.raises(ValueError, match="do not pass both"):
        est.fit(example1, weights=[1] * 9)


def test_invalid_n_runs(example1):
    with pytest.raises(ValueError, match="n_runs"):
        MaxWeightCliqueSearch(n_runs=0, max_steps=10).fit(example1)
    with pytest.raises(ValueError, match="n_runs"):
        MaxWeightCliqueSearch(n_runs="2", max_steps=10).fit(example1)


def test_bad_solver_params_surface_at_fit(example1):
    with pytest.raises(ValueError, match="mode"):
        MaxWeightCliqueSearch(mode="anneal", max_steps=10).fit(example1)
    with pytest.raises(ValueError):
        MaxWeightCliqueSearch().fit(example1)  # no budget given


def test_bool_matrix_accepted():
    A = np.array([[False, True], [True, False]])
    est = MaxWeightCliqueSearch(seed=1, max_steps=100).fit(A, weights=[4, 9])
    assert est.best_weight_ == 13
    assert est.best_clique_ == (1, 2)
