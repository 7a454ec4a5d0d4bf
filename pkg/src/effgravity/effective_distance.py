"""Random-walk effective distance between node pairs.

The distance from m to n is ``1 - log2(p*)`` where ``p*`` is the largest
probability of any walk from m to n under uniform single-step transitions
(1/degree per neighbor). The constant 1 is added once per pair, not per hop.
Because each step multiplies the probability by 1/degree of the node being
left, the optimal walk is a shortest path under per-edge weight
``log2(degree(u))`` for the edge leaving u, which is what the Dijkstra pass
below computes. The quantity is asymmetric even on undirected graphs, and
the self-distance is infinite (a walk never "arrives" at its start).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import IO

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class TransitionRow:
    """Single-step transition probabilities out of one node."""

    source: int
    probs: np.ndarray
    isolated: bool


def transition_probabilities(graph: Graph, node: int) -> TransitionRow:
    """Dense row of one-step probabilities: 1/degree at neighbors, 0 elsewhere.

    An isolated node yields an all-zero row with ``isolated=True`` rather
    than an error.
    """
    graph.check_node(node)
    probs = np.zeros(graph.n, dtype=np.float64)
    nbrs = graph.neighbors(node)
    if nbrs.size == 0:
        return TransitionRow(source=node, probs=probs, isolated=True)
    probs[nbrs] = 1.0 / nbrs.size
    return TransitionRow(source=node, probs=probs, isolated=False)


def effective_distances(graph: Graph, source: int) -> np.ndarray:
    """Effective distances from ``source`` to every node.

    Returns a float row with ``inf`` for the source itself and for
    unreachable targets. Finite entries are always >= 1, and a node whose
    best walk is its direct edge sits at exactly ``1 + log2(degree(source))``.
    """
    graph.check_node(source)
    n = graph.n
    # weight of every edge leaving u; isolated nodes have no outgoing edges
    leave_cost = np.log2(np.maximum(graph.degrees, 1)).astype(np.float64)
    dist = np.full(n, np.inf, dtype=np.float64)
    dist[source] = 0.0
    done = np.zeros(n, dtype=bool)
    heap: list[tuple[float, int]] = [(0.0, source)]
    indptr, indices = graph.indptr, graph.indices
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        du = d + leave_cost[u]
        for v in indices[indptr[u] : indptr[u + 1]]:
            if du < dist[v]:
                dist[v] = du
                heapq.heappush(heap, (du, int(v)))
    result = dist + 1.0
    result[source] = np.inf
    return result


def effective_distance_matrix(graph: Graph) -> np.ndarray:
    """All-pairs effective distances, one independently computed row per source."""
    if graph.n == 0:
        raise ValueError("effective distances are undefined for an empty graph")
    return np.stack([effective_distances(graph, s) for s in range(graph.n)])


def write_matrix_csv(graph: Graph, matrix: np.ndarray, out: IO[str]) -> None:
    """Dump a distance matrix as CSV: target labels across, one row per source.

    Infinite entries are written as ``inf``.
    """
    if matrix.shape != (graph.n, graph.n):
        raise ValueError(
            f"matrix shape {matrix.shape} does not match graph with {graph.n} nodes"
        )
    out.write("source," + ",".join(graph.labels) + "\n")
    for i, label in enumerate(graph.labels):
        cells = ",".join("inf" if not np.isfinite(x) else repr(float(x)) for x in matrix[i])
        out.write(f"{label},{cells}\n")
