"""Node-influence measures and deterministic rankings.

Seven measures share the ScoreVector/Ranking interface: degree (dc),
betweenness (bc), closeness (cc), eigenvector (ec), pagerank, the
degree-gravity score over hop distances (gm), and the same gravity score
over effective distances (effg). All are pure functions of the immutable
graph, so they can run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import effective_distance as ed
from .graph import Graph, hop_distances

MEASURES = ("dc", "bc", "cc", "ec", "pagerank", "gm", "effg")

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 1000


class ConvergenceError(RuntimeError):
    """An iterative measure failed to reach its tolerance."""

    def __init__(self, message: str, residual: float, iterations: int):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class ScoreVector:
    """Per-node scores for one measure, plus solver metadata where relevant."""

    measure: str
    scores: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if not np.all(np.isfinite(self.scores)):
            raise ValueError(f"{self.measure}: scores must all be finite")


@dataclass(frozen=True)
class Ranking:
    """Descending-score node order with 1-based rank per node.

    Ties are broken by ascending node index, so two runs over the same
    graph produce identical rankings.
    """

    order: np.ndarray
    ranks: np.ndarray

    def top(self, k: int) -> np.ndarray:
        if not 0 <= k <= self.order.size:
            raise ValueError(f"k={k} out of range for {self.order.size} nodes")
        return self.order[:k]


def rank(score_vector: ScoreVector) -> Ranking:
    """Order nodes by descending score; equal scores keep ascending index order."""
    scores = score_vector.scores
    order = np.argsort(-scores, kind="stable")
    ranks = np.empty(scores.size, dtype=np.int64)
    ranks[order] = np.arange(1, scores.size + 1)
    order.setflags(write=False)
    ranks.setflags(write=False)
    return Ranking(order=order, ranks=ranks)


def _neighbor_sums(graph: Graph, values: np.ndarray) -> np.ndarray:
    """Adjacency matrix times a vector: sum of ``values`` over each node's neighbors."""
    if graph.indices.size == 0:
        return np.zeros(graph.n, dtype=np.float64)
    return np.bincount(
        graph.edge_sources, weights=values[graph.indices], minlength=graph.n
    )


def degree_centrality(graph: Graph) -> ScoreVector:
    """Score each node by its degree."""
    return ScoreVector("dc", graph.degrees.astype(np.float64))


def betweenness_centrality(graph: Graph) -> ScoreVector:
    """Count, per node, the fraction of shortest paths passing through it.

    Sums N_jk(i)/N_jk over unordered pairs {j, k} with i strictly interior.
    Uses the standard dependency-accumulation scheme over per-source BFS
    shortest-path DAGs, then halves to convert ordered pairs to unordered.
    Disconnected pairs contribute nothing.
    """
    n = graph.n
    indptr, indices = graph.indptr, graph.indices
    bc = np.zeros(n, dtype=np.float64)
    for s in range(n):
        sigma = np.zeros(n, dtype=np.float64)
        sigma[s] = 1.0
        dist = np.full(n, -1, dtype=np.int64)
        dist[s] = 0
        preds: list[list[int]] = [[] for _ in range(n)]
        stack: list[int] = []
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            stack.append(u)
            for v in indices[indptr[u] : indptr[u + 1]]:
                v = int(v)
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
                    preds[v].append(u)
        delta = np.zeros(n, dtype=np.float64)
        for w in reversed(stack):
            coeff = (1.0 + delta[w]) / sigma[w]
            for u in preds[w]:
                delta[u] += sigma[u] * coeff
            if w != s:
                bc[w] += delta[w]
    return ScoreVector("bc", bc / 2.0)


def closeness_centrality(graph: Graph) -> ScoreVector:
    """Reciprocal of the summed hop distance to all reachable peers; 0 with no peers."""
    scores = np.zeros(graph.n, dtype=np.float64)
    for i in range(graph.n):
        row = hop_distances(graph, i)
        total = int(row[row > 0].sum())
        if total > 0:
            scores[i] = 1.0 / total
    return ScoreVector("cc", scores)


def eigenvector_centrality(
    graph: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> ScoreVector:
    """Principal eigenvector of the adjacency matrix, unit Euclidean length.

    Power iteration starts from the uniform positive vector; iterating with
    the shift A + I keeps bipartite graphs (where -lambda is also an
    eigenvalue) from oscillating without changing the eigenvector. The
    eigenvalue estimate is the Rayleigh quotient of A, and convergence is
    declared when ||Ax - lambda*x|| <= tol. On disconnected graphs the
    vector concentrates on the component with the largest eigenvalue.
    """
    if graph.m == 0:
        raise ValueError("eigenvector centrality requires at least one edge")
    n = graph.n
    x = np.full(n, 1.0 / np.sqrt(n))
    residual = np.inf
    eigenvalue = 0.0
    for iteration in range(1, max_iter + 1):
        ax = _neighbor_sums(graph, x)
        eigenvalue = float(x @ ax)
        residual = float(np.linalg.norm(ax - eigenvalue * x))
        if residual <= tol:
            return ScoreVector(
                "ec",
                x,
                metadata={
                    "eigenvalue": eigenvalue,
                    "residual": residual,
                    "iterations": iteration - 1,
                },
            )
        shifted = ax + x
        x = shifted / np.linalg.norm(shifted)
    raise ConvergenceError(
        f"eigenvector centrality did not reach tol={tol} after {max_iter} "
        f"iterations (last residual {residual:.3e})",
        residual=residual,
        iterations=max_iter,
    )


def pagerank(
    graph: Graph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    damping: float = 1.0,
) -> ScoreVector:
    """Random-walk influence scores by fixed-point iteration.

    Updates x(i) <- sum over neighbors j of x(j)/degree(j), starting from
    the uniform distribution, until the L1 change drops to tol. The default
    damping of 1.0 is the undamped update, which diverges on bipartite
    structure (period-2 oscillation); pass damping < 1 for the damped form
    (1-d)/n_active + d * sum. Isolated nodes are pinned to score 0 and
    excluded from the uniform start and the damping redistribution.
    """
    if not 0.0 < damping <= 1.0:
        raise ValueError(f"damping must be in (0, 1], got {damping}")
    n = graph.n
    degrees = graph.degrees
    active = degrees > 0
    n_active = int(active.sum())
    if n_active == 0:
        return ScoreVector(
            "pagerank", np.zeros(n), metadata={"iterations": 0, "delta": 0.0}
        )
    x = np.where(active, 1.0 / n_active, 0.0)
    safe_degrees = np.maximum(degrees, 1).astype(np.float64)
    delta = np.inf
    for iteration in range(1, max_iter + 1):
        spread = _neighbor_sums(graph, x / safe_degrees)
        if damping < 1.0:
            x_next = np.where(active, (1.0 - damping) / n_active + damping * spread, 0.0)
        else:
            x_next = spread
        delta = float(np.abs(x_next - x).sum())
        x = x_next
        if delta <= tol:
            return ScoreVector(
                "pagerank", x, metadata={"iterations": iteration, "delta": delta}
            )
    raise ConvergenceError(
        f"pagerank did not reach tol={tol} after {max_iter} iterations "
        f"(last L1 change {delta:.3e}); bipartite graphs oscillate at "
        f"damping=1.0, retry with damping < 1",
        residual=delta,
        iterations=max_iter,
    )


def gravity_centrality(graph: Graph) -> ScoreVector:
    """Degree-gravity score over hop distances.

    score(i) = degree(i) * sum over reachable j != i of degree(j)/d(i,j)^2,
    with no interaction radius cutoff. Unreachable pairs contribute nothing.
    """
    degrees = graph.degrees.astype(np.float64)
    scores = np.zeros(graph.n, dtype=np.float64)
    for i in range(graph.n):
        row = hop_distances(graph, i)
        mask = row > 0
        scores[i] = degrees[i] * float(np.sum(degrees[mask] / row[mask] ** 2))
    return ScoreVector("gm", scores)


def effg_centrality(graph: Graph, distance_matrix: np.ndarray) -> ScoreVector:
    """Degree-gravity score over effective distances.

    Same gravity sum as :func:`gravity_centrality` but separation is the
    outbound effective-distance row of ``distance_matrix`` (asymmetric).
    Infinite entries, including the diagonal, contribute nothing.
    """
    n = graph.n
    if distance_matrix.shape != (n, n):
        raise ValueError(
            f"distance matrix shape {distance_matrix.shape} does not match "
            f"graph with {n} nodes"
        )
    degrees = graph.degrees.astype(np.float64)
    scores = np.zeros(n, dtype=np.float64)
    for i in range(n):
        row = distance_matrix[i]
        mask = np.isfinite(row)
        scores[i] = degrees[i] * float(np.sum(degrees[mask] / row[mask] ** 2))
    return ScoreVector("effg", scores)


def compute_scores(
    graph: Graph,
    measures: Sequence[str],
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    damping: float = 1.0,
    distance_matrix: np.ndarray | None = None,
) -> Mapping[str, ScoreVector]:
    """Compute several measures at once, in the order requested.

    The effective-distance matrix needed by ``effg`` is computed on demand
    (or pass a precomputed one). Unknown measure names raise ValueError.
    """
    unknown = [name for name in measures if name not in MEASURES]
    if unknown:
        raise ValueError(
            f"unknown measures {unknown}; valid names are {', '.join(MEASURES)}"
        )
    results: dict[str, ScoreVector] = {}
    for name in measures:
        if name == "dc":
            results[name] = degree_centrality(graph)
        elif name == "bc":
            results[name] = betweenness_centrality(graph)
        elif name == "cc":
            results[name] = closeness_centrality(graph)
        elif name == "ec":
            results[name] = eigenvector_centrality(graph, tol=tol, max_iter=max_iter)
        elif name == "pagerank":
            results[name] = pagerank(graph, tol=tol, max_iter=max_iter, damping=damping)
        elif name == "gm":
            results[name] = gravity_centrality(graph)
        elif name == "effg":
            if distance_matrix is None:
                distance_matrix = ed.effective_distance_matrix(graph)
            results[name] = effg_centrality(graph, distance_matrix)
    return results
