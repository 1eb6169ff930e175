"""Vertex-weighted undirected graphs and DIMACS/wclq instance parsing.

Vertices are 1-based everywhere in the public API, matching the DIMACS
convention.  Every edge carries a stable 0-based id assigned by first
appearance in the input (or lexicographic (i, j) order for generated
graphs); the id doubles as the exponent offset used by the scenario hash.
"""

from __future__ import annotations

import io
from typing import Iterable, Sequence, TextIO

import numpy as np

MAX_TOTAL_WEIGHT = 2**63 - 1


class GraphError(ValueError):
    """Raised for malformed instance files or inconsistent graph data."""


class WeightedGraph:
    """Immutable undirected graph with non-negative integer vertex weights.

    Adjacency is stored CSR-style, each entry carrying (neighbor, edge id),
    rows sorted by neighbor index.  Arrays are frozen after construction so
    a graph can be shared freely between concurrent solver runs.
    """

    __slots__ = (
        "n",
        "m",
        "weights",
        "indptr",
        "nbr",
        "eid",
        "duplicate_edges_dropped",
        "self_loops_dropped",
        "_adj_sets",
    )

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        weights: Sequence[int],
        *,
        _counts: tuple[int, int] = (0, 0),
    ):
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        w = np.zeros(n + 1, dtype=np.int64)
        if len(weights) != n:
            raise GraphError(f"expected {n} weights, got {len(weights)}")
        for i, wi in enumerate(weights, start=1):
            if wi < 0:
                raise GraphError(f"weight of vertex {i} is negative ({wi})")
            w[i] = wi
        total = int(w.sum(dtype=object))
        if total > MAX_TOTAL_WEIGHT:
            raise GraphError(f"total weight {total} exceeds 63-bit range")

        # Deduplicate while preserving first-appearance order; ids are the
        # positions in the deduplicated sequence.
        seen: dict[tuple[int, int], int] = {}
        dup, loops = _counts
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                loops += 1
                continue
            key = (u, v) if u < v else (v, u)
            if key in seen:
                dup += 1
                continue
            seen[key] = len(seen)

        m = len(seen)
        us = np.fromiter((k[0] for k in seen), dtype=np.int64, count=m)
        vs = np.fromiter((k[1] for k in seen), dtype=np.int64, count=m)
        ids = np.arange(m, dtype=np.int64)

        rows = np.concatenate([us, vs])
        cols = np.concatenate([vs, us])
        eids = np.concatenate([ids, ids])
        order = np.lexsort((cols, rows))
        rows, cols, eids = rows[order], cols[order], eids[order]

        indptr = np.zeros(n + 2, dtype=np.int64)
        np.add.at(indptr, rows + 1, 1)
        np.cumsum(indptr, out=indptr)

        self.n = n
        self.m = m
        self.weights = w
        self.indptr = indptr
        self.nbr = cols
        self.eid = eids
        self.duplicate_edges_dropped = dup
        self.self_loops_dropped = loops
        self._adj_sets: list[set[int]] | None = None
        for arr in (self.weights, self.indptr, self.nbr, self.eid):
            arr.setflags(write=False)

    # -- queries ---------------------------------------------------------

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        return self.nbr[self.indptr[v] : self.indptr[v + 1]]

    def neighbor_ids(self, v: int) -> np.ndarray:
        return self.eid[self.indptr[v] : self.indptr[v + 1]]

    def _row_pos(self, u: int, v: int) -> int:
        lo, hi = int(self.indptr[u]), int(self.indptr[u + 1])
        k = lo + int(np.searchsorted(self.nbr[lo:hi], v))
        if k < hi and self.nbr[k] == v:
            return k
        return -1

    def has_edge(self, u: int, v: int) -> bool:
        if not (1 <= u <= self.n and 1 <= v <= self.n) or u == v:
            return False
        return self._row_pos(u, v) >= 0

    def edge_id(self, u: int, v: int) -> int:
        k = self._row_pos(u, v)
        assert k >= 0, f"({u}, {v}) is not an edge"
        return int(self.eid[k])

    def adjacency_sets(self) -> list[set[int]]:
        """Per-vertex neighbor sets (index 0 unused). Cached; test helper."""
        if self._adj_sets is None:
            sets: list[set[int]] = [set() for _ in range(self.n + 1)]
            for v in range(1, self.n + 1):
                sets[v] = set(int(x) for x in self.neighbors(v))
            self._adj_sets = sets
        return self._adj_sets

    def weight_of(self, v: int) -> int:
        return int(self.weights[v])

    def weight_sum(self, vertices: Iterable[int]) -> int:
        return sum(int(self.weights[v]) for v in vertices)

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"


def mod200_weights(n: int) -> list[int]:
    """Default DIMACS weighting: w(v_i) = (i mod 200) + 1."""
    return [(i % 200) + 1 for i in range(1, n + 1)]


def complement(g: WeightedGraph) -> WeightedGraph:
    """Complement graph; same weights, fresh edge ids in lexicographic order."""
    present = g.adjacency_sets()
    edges = [
        (u, v)
        for u in range(1, g.n + 1)
        for v in range(u + 1, g.n + 1)
        if v not in present[u]
    ]
    return WeightedGraph(g.n, edges, [int(g.weights[i]) for i in range(1, g.n + 1)])


def parse_instance(
    source: str | TextIO,
    *,
    weight_mode: str = "auto",
    fmt: str = "auto",
) -> WeightedGraph:
    """Parse a DIMACS ascii instance, optionally with wclq weight lines.

    Recognized lines: 'c ...' comments, one 'p <format> <n> <m>' header,
    'e u v' edges, 'v i w' vertex weights.  Duplicate edges and self-loops
    are dropped (counted on the returned graph, not fatal).  The edge count
    in the header is not trusted; the actual edge lines win.

    weight_mode: 'mod200' ignores v lines for weighting, 'from_file'
    requires a weight for every vertex, 'auto' uses file weights iff at
    least one v line is present.
    fmt: 'dimacs' rejects v lines, 'wclq' requires them, 'auto' accepts both.
    """
    if weight_mode not in ("mod200", "from_file", "auto"):
        raise ValueError(f"unknown weight_mode {weight_mode!r}")
    if fmt not in ("dimacs", "wclq", "auto"):
        raise ValueError(f"unknown fmt {fmt!r}")
    stream = io.StringIO(source) if isinstance(source, str) else source

    n = -1
    edges: list[tuple[int, int]] = []
    file_weights: dict[int, int] = {}
    for lineno, raw in enumerate(stream, start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        kind = fields[0]
        if kind == "p":
            if n >= 0:
                raise GraphError(f"line {lineno}: duplicate problem header")
            if len(fields) != 4:
                raise GraphError(f"line {lineno}: malformed header {raw.strip()!r}")
            try:
                n = int(fields[2])
                int(fields[3])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header {raw.strip()!r}") from None
            if n < 1:
                raise GraphError(f"line {lineno}: vertex count must be >= 1")
        elif kind == "e":
            if n < 0:
                raise GraphError(f"line {lineno}: edge before problem header")
            if len(fields) != 3:
                raise GraphError(f"line {lineno}: malformed edge line {raw.strip()!r}")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed edge line {raw.strip()!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"line {lineno}: edge endpoint out of range ({u}, {v})")
            edges.append((u, v))
        elif kind == "v":
            if n < 0:
                raise GraphError(f"line {lineno}: weight before problem header")
            if len(fields) != 3:
                raise GraphError(f"line {lineno}: malformed weight line {raw.strip()!r}")
            try:
                i, wv = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed weight line {raw.strip()!r}") from None
            if not (1 <= i <= n):
                raise GraphError(f"line {lineno}: weight for unknown vertex {i}")
            if i in file_weights:
                raise GraphError(f"line {lineno}: duplicate weight for vertex {i}")
            if wv < 0:
                raise GraphError(f"line {lineno}: negative weight for vertex {i}")
            file_weights[i] = wv
        else:
            raise GraphError(f"line {lineno}: unrecognized line {raw.strip()!r}")

    if n < 0:
        raise GraphError("missing problem header")
    if fmt == "dimacs" and file_weights:
        raise GraphError("format 'dimacs' forbids v lines (use 'wclq' or 'auto')")
    if fmt == "wclq" and not file_weights:
        raise GraphError("format 'wclq' requires v lines")

    use_file = weight_mode == "from_file" or (weight_mode == "auto" and bool(file_weights))
    if use_file:
        missing = [i for i in range(1, n + 1) if i not in file_weights]
        if missing:
            raise GraphError(f"missing weights for vertices {missing[:5]}"
                             + ("..." if len(missing) > 5 else ""))
        weights = [file_weights[i] for i in range(1, n + 1)]
    else:
        weights = mod200_weights(n)
    return WeightedGraph(n, edges, weights)
