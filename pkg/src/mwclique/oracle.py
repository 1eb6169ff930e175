"""Exact maximum-weight-clique reference for small instances.

Two independent routes: a bitmask dynamic program that enumerates every
clique (n <= 16, used by the tests to cross-check), and a branch and
bound with the plain weight-sum bound that handles the n <= 40 sizes the
acceptance runs need.  Both report the same canonical witness: among all
optimum cliques, the lexicographically smallest sorted vertex tuple.
"""

from __future__ import annotations

from .graph import WeightedGraph

MAX_EXACT_N = 40
_MAX_ENUM_N = 16


def solve_exact(graph: WeightedGraph) -> tuple[int, tuple[int, ...]]:
    """Optimal weight and the lexicographically smallest optimal clique."""
    if graph.n > MAX_EXACT_N:
        raise ValueError(
            f"exact solver is limited to n <= {MAX_EXACT_N}, got {graph.n}")
    best = _best_weight(graph)
    witness = _lex_min_witness(graph, best)
    return best, witness


def _best_weight(graph: WeightedGraph) -> int:
    """Branch and bound over candidate lists, heaviest candidate first,
    pruning on the weight sum of whatever is still available."""
    adj = graph.adjacency_sets()
    w = graph.weights
    best = 0

    def rec(cur: int, cand: list[int]) -> None:
        nonlocal best
        if cur > best:
            best = cur
        avail = 0
        for v in cand:
            avail += int(w[v])
        for i, v in enumerate(cand):
            if cur + avail <= best:
                return
            rec(cur + int(w[v]), [u for u in cand[i + 1:] if u in adj[v]])
            avail -= int(w[v])

    order = sorted(range(1, graph.n + 1), key=lambda v: (-int(w[v]), v))
    rec(0, order)
    return best


def _reaches(graph: WeightedGraph, clique: list[int], cand: list[int],
             target: int) -> bool:
    """Decision variant: can clique be extended with vertices from cand
    (already pairwise-compatible with it) to weight >= target?"""
    w = graph.weights
    adj = graph.adjacency_sets()

    def rec(cur: int, pool: list[int]) -> bool:
        if cur >= target:
            return True
        avail = 0
        for v in pool:
            avail += int(w[v])
        if cur + avail < target:
            return False
        for i, v in enumerate(pool):
            if rec(cur + int(w[v]), [u for u in pool[i + 1:] if u in adj[v]]):
                return True
        return False

    base = sum(int(w[v]) for v in clique)
    pool = sorted(cand, key=lambda v: (-int(w[v]), v))
    return rec(base, pool)


def _lex_min_witness(graph: WeightedGraph, best: int) -> tuple[int, ...]:
    """Build the lex-min optimal clique by committing to the smallest
    viable vertex at each position; stops as soon as the weight is
    reached, since any further extension is lexicographically larger."""
    if best == 0:
        return ()
    w = graph.weights
    adj = graph.adjacency_sets()
    clique: list[int] = []
    weight = 0
    cand = list(range(1, graph.n + 1))
    while weight < best:
        for v in cand:
            rest = [u for u in cand if u > v and u in adj[v]]
            if _reaches(graph, clique + [v], rest, best):
                clique.append(v)
                weight += int(w[v])
                cand = rest
                break
        else:
            raise AssertionError("witness search lost the optimum")
    return tuple(clique)


def enumerate_exact(graph: WeightedGraph) -> tuple[int, tuple[int, ...]]:
    """Independent check: walk all 2^n subsets with a clique-closure DP."""
    n = graph.n
    if n > _MAX_ENUM_N:
        raise ValueError(
            f"enumeration is limited to n <= {_MAX_ENUM_N}, got {n}")
    adj_bits = [0] * (n + 1)
    for v in range(1, n + 1):
        for u in graph.neighbors(v):
            adj_bits[v] |= 1 << (int(u) - 1)
    w = graph.weights
    is_clique = [False] * (1 << n)
    weight = [0] * (1 << n)
    is_clique[0] = True
    best, best_set = 0, 0
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length()  # lowest set vertex, 1-based
        rest = mask & (mask - 1)
        if is_clique[rest] and (rest & ~adj_bits[low]) == 0:
            is_clique[mask] = True
            weight[mask] = weight[rest] + int(w[low])
            if weight[mask] > best:
                best, best_set = weight[mask], mask
            elif weight[mask] == best and _members(mask) < _members(best_set):
                best_set = mask
    return best, _members(best_set)


def _members(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)
