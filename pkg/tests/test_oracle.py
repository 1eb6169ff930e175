import random

import pytest

from mwclique import WeightedGraph, enumerate_exact, parse_instance, solve_exact

from helpers import random_graph


def test_example_fixture_optimum(example1):
    assert solve_exact(example1) == (193, (3, 5, 6, 8))


def test_k3(k3):
    assert solve_exact(k3) == (9, (1, 2, 3))


def test_single_vertex():
    g = parse_instance("p edge 1 0\n")
    assert solve_exact(g) == (2, (1,))
    assert enumerate_exact(g) == (2, (1,))


def test_edgeless_picks_heaviest_vertex():
    g = WeightedGraph(4, [], [5, 9, 9, 2])
    # two singletons tie at 9; the smaller index wins
    assert solve_exact(g) == (9, (2,))
    assert enumerate_exact(g) == (9, (2,))


def test_lex_min_tie_between_disjoint_optima():
    g = WeightedGraph(4, [(1, 4), (2, 3)], [1, 3, 7, 9])
    # {1,4} and {2,3} both weigh 10; (1,4) is lexicographically first
    assert solve_exact(g) == (10, (1, 4))
    assert enumerate_exact(g) == (10, (1, 4))


def test_zero_weight_graph_yields_empty_witness():
    g = WeightedGraph(3, [(1, 2)], [0, 0, 0])
    assert solve_exact(g) == (0, ())
    assert enumerate_exact(g) == (0, ())


def test_prefix_tie_prefers_shorter_clique():
    # {1} alone is optimal; the zero-weight extension {1,2} must lose
    g = WeightedGraph(2, [(1, 2)], [5, 0])
    assert solve_exact(g) == (5, (1,))
    assert enumerate_exact(g) == (5, (1,))


def test_size_guards():
    g = WeightedGraph(41, [], [1] * 41)
    with pytest.raises(ValueError):
        solve_exact(g)
    g17 = WeightedGraph(17, [], [1] * 17)
    with pytest.raises(ValueError):
        enumerate_exact(g17)


def test_branch_and_bound_agrees_with_enumeration():
    rng = random.Random(20240817)
    for trial in range(200):
        n = rng.randint(2, 16)
        density = rng.choice((0.2, 0.5, 0.8))
        if trial % 3 == 0:
            weights = [rng.randint(0, 50) for _ in range(n)]
        else:
            weights = None
        g = random_graph(rng, n, density, weights)
        assert solve_exact(g) == enumerate_exact(g)
