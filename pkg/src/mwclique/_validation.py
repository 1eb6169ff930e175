"""Input coercion for the estimator front-end."""

from __future__ import annotations

import numpy as np

from .graph import WeightedGraph


def as_graph(X, weights=None) -> WeightedGraph:
    """Coerce X to a WeightedGraph.

    X may already be a WeightedGraph (weights must then be None), or a
    square symmetric 0/1 adjacency matrix with a zero diagonal; row and
    column i of the matrix correspond to vertex i+1.  weights defaults to
    all ones for matrix input.
    """
    if isinstance(X, WeightedGraph):
        if weights is not None:
            raise ValueError(
                "weights are taken from the graph; do not pass both")
        return X
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    n = A.shape[0]
    if n == 0:
        raise ValueError("adjacency matrix must have at least one vertex")
    if not np.issubdtype(A.dtype, np.number) and A.dtype != np.bool_:
        raise ValueError(f"adjacency matrix must be numeric, got dtype {A.dtype}")
    A = A.astype(np.int64)
    if not np.isin(A, (0, 1)).all():
        raise ValueError("adjacency matrix entries must be 0 or 1")
    if np.diag(A).any():
        raise ValueError("adjacency matrix must have a zero diagonal")
    if not (A == A.T).all():
        raise ValueError("adjacency matrix must be symmetric")
    if weights is None:
        w = [1] * n
    else:
        w_arr = np.asarray(weights)
        if w_arr.shape != (n,):
            raise ValueError(
                f"weights must have shape ({n},), got {w_arr.shape}")
        w = [int(x) for x in w_arr]
    rows, cols = np.nonzero(np.triu(A, k=1))
    edges = [(int(r) + 1, int(c) + 1) for r, c in zip(rows, cols)]
    return WeightedGraph(n, edges, w)
