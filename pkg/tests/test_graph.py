import io
import random

import numpy as np
import pytest

from mwclique import GraphError, WeightedGraph, complement, mod200_weights, parse_instance

from helpers import random_graph

K3_TEXT = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"


def test_parse_k3_weights_and_edge_ids():
    g = parse_instance(K3_TEXT)
    assert (g.n, g.m) == (3, 3)
    assert list(g.weights[1:]) == [2, 3, 4]
    # ids follow first appearance in the file
    assert g.edge_id(1, 2) == 0
    assert g.edge_id(1, 3) == 1
    assert g.edge_id(2, 3) == 2
    assert g.edge_id(3, 2) == 2


def test_mod200_weight_rule():
    w = mod200_weights(201)
    assert w[0] == 2  # vertex 1
    assert w[199] == 1  # vertex 200
    assert w[200] == 2  # vertex 201
    g = parse_instance("p edge 201 1\ne 1 201\n")
    assert g.weight_of(1) == 2
    assert g.weight_of(200) == 1
    assert g.weight_of(201) == 2


def test_parse_file_weights_win_under_auto():
    g = parse_instance("p edge 2 1\ne 1 2\nv 1 7\nv 2 9\n")
    assert list(g.weights[1:]) == [7, 9]


def test_parse_partial_file_weights_rejected():
    with pytest.raises(GraphError, match="missing"):
        parse_instance("p edge 3 1\ne 1 2\nv 1 7\n")


def test_from_file_mode_requires_v_lines():
    with pytest.raises(GraphError):
        parse_instance(K3_TEXT, weight_mode="from_file")


def test_mod200_mode_ignores_v_lines():
    g = parse_instance("p edge 2 1\ne 1 2\nv 1 7\nv 2 9\n",
                       weight_mode="mod200")
    assert list(g.weights[1:]) == [2, 3]


def test_fmt_dimacs_rejects_v_lines():
    with pytest.raises(GraphError):
        parse_instance("p edge 2 1\ne 1 2\nv 1 7\nv 2 9\n", fmt="dimacs")


def test_fmt_wclq_requires_v_lines():
    with pytest.raises(GraphError):
        parse_instance(K3_TEXT, fmt="wclq")


def test_parse_errors():
    with pytest.raises(GraphError, match="header"):
        parse_instance("e 1 2\n")
    with pytest.raises(GraphError):
        parse_instance("p edge 2 1\np edge 2 1\ne 1 2\n")
    with pytest.raises(GraphError):
        parse_instance("p edge 2 1\ne 1 5\n")
    with pytest.raises(GraphError):
        parse_instance("p edge 2 1\nx 1 2\n")
    with pytest.raises(GraphError):
        parse_instance("p edge 2 1\ne 1 2\nv 1 -3\nv 2 1\n")
    with pytest.raises(GraphError):
        parse_instance("p edge 2 1\ne 1 2\nv 1 3\nv 1 4\n")
    with pytest.raises(GraphError):
        parse_instance("p edge 0 0\n")


def test_duplicate_edges_and_self_loops_dropped():
    g = parse_instance("p edge 3 4\ne 1 2\ne 2 1\ne 1 1\ne 2 3\n")
    assert g.m == 2
    assert g.duplicate_edges_dropped == 1
    assert g.self_loops_dropped == 1
    assert g.edge_id(1, 2) == 0 and g.edge_id(2, 3) == 1


def test_header_edge_count_not_trusted():
    g = parse_instance("p edge 3 99\ne 1 2\n")
    assert g.m == 1


def test_comments_and_blank_lines_skipped():
    g = parse_instance("c hello\n\np edge 2 1\nc mid\ne 1 2\n")
    assert g.m == 1


def test_single_vertex_instance():
    g = parse_instance("p edge 1 0\n")
    assert (g.n, g.m) == (1, 0)
    assert g.degree(1) == 0


def test_text_stream_input():
    g = parse_instance(io.StringIO(K3_TEXT))
    assert g.m == 3


def test_neighbors_sorted_and_degree():
    g = parse_instance("p edge 4 3\ne 3 1\ne 3 4\ne 2 3\n")
    assert list(g.neighbors(3)) == [1, 2, 4]
    assert g.degree(3) == 3
    assert g.degree(1) == 1
    assert g.has_edge(1, 3) and not g.has_edge(1, 2)


def test_edge_id_bijection_on_random_graph():
    rng = random.Random(11)
    g = random_graph(rng, 25, 0.4)
    seen = {}
    for u in range(1, g.n + 1):
        for v, e in zip(g.neighbors(u), g.neighbor_ids(u)):
            key = (min(u, int(v)), max(u, int(v)))
            seen.setdefault(key, set()).add(int(e))
    # both directions carry the same id, ids cover 0..m-1 exactly once
    assert all(len(ids) == 1 for ids in seen.values())
    assert sorted(next(iter(ids)) for ids in seen.values()) == list(range(g.m))
    for (u, v), ids in seen.items():
        assert g.edge_id(u, v) == next(iter(ids))


def test_complement_small():
    g = parse_instance("p edge 4 2\ne 1 2\ne 3 4\n")
    c = complement(g)
    assert c.m == 4
    assert c.has_edge(1, 3) and c.has_edge(1, 4)
    assert c.has_edge(2, 3) and c.has_edge(2, 4)
    assert not c.has_edge(1, 2) and not c.has_edge(3, 4)
    assert list(c.weights) == list(g.weights)
    # complement ids are assigned in lexicographic pair order
    assert c.edge_id(1, 3) == 0
    assert c.edge_id(2, 4) == 3


def test_double_complement_restores_edges():
    rng = random.Random(5)
    g = random_graph(rng, 15, 0.35)
    cc = complement(complement(g))
    assert cc.m == g.m
    for u in range(1, 16):
        assert list(cc.neighbors(u)) == list(g.neighbors(u))


def test_weight_overflow_rejected():
    big = 2**62
    with pytest.raises(GraphError, match="total weight"):
        WeightedGraph(3, [(1, 2)], [big, big, big])


def test_negative_weight_rejected():
    with pytest.raises(GraphError):
        WeightedGraph(2, [(1, 2)], [1, -1])


def test_arrays_are_frozen():
    g = parse_instance(K3_TEXT)
    with pytest.raises(ValueError):
        g.weights[1] = 99
    with pytest.raises(ValueError):
        g.nbr[0] = 0


def test_adjacency_sets_match_csr():
    rng = random.Random(3)
    g = random_graph(rng, 20, 0.3)
    adj = g.adjacency_sets()
    for v in range(1, 21):
        assert adj[v] == set(int(u) for u in g.neighbors(v))


def test_mismatched_weight_length_rejected():
    with pytest.raises(GraphError):
        WeightedGraph(3, [(1, 2)], [1, 2])
