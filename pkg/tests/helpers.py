"""Shared test utilities: random graph builders and brute-force oracles.

The oracles deliberately take the most literal route (path enumeration,
pairwise double loops) so they stay independent of the library's own
algorithms.
"""

from __future__ import annotations

import math
from collections import Counter

import numpy as np

from effgravity import Graph, hop_distances


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges."""
    order = rng.permutation(n)
    edges = set()
    for idx in range(1, n):
        a = int(order[idx])
        b = int(order[int(rng.integers(0, idx))])
        edges.add((min(a, b), max(a, b)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return Graph.from_edges(n, sorted(edges))


def effective_distance_bruteforce(graph: Graph) -> np.ndarray:
    """Enumerate every simple path, track its probability product, and take
    the minimum of 1 - log2(product) per ordered pair."""
    n = graph.n
    degrees = graph.degrees
    best = np.full((n, n), np.inf)

    def walk(source: int, u: int, product: float, visited: frozenset) -> None:
        step = product / degrees[u]
        for v in graph.neighbors(u):
            v = int(v)
            if v in visited:
                continue
            value = 1.0 - math.log2(step)
            if value < best[source, v]:
                best[source, v] = value
            walk(source, v, step, visited | {v})

    for source in range(n):
        if degrees[source] > 0:
            walk(source, source, 1.0, frozenset((source,)))
    return best


def betweenness_bruteforce(graph: Graph) -> np.ndarray:
    """Enumerate all shortest paths per unordered pair and count interior visits."""
    n = graph.n
    scores = np.zeros(n)
    for s in range(n):
        dist = hop_distances(graph, s)

        def shortest_paths_to(t: int) -> list[list[int]]:
            if t == s:
                return [[s]]
            paths = []
            for u in graph.neighbors(t):
                u = int(u)
                if dist[u] == dist[t] - 1:
                    paths.extend(path + [t] for path in shortest_paths_to(u))
            return paths

        for t in range(s + 1, n):
            if dist[t] <= 0:
                continue
            paths = shortest_paths_to(t)
            interior = Counter(v for path in paths for v in path[1:-1])
            for v, count in interior.items():
                scores[v] += count / len(paths)
    return scores


def kendall_counts_bruteforce(x, y) -> tuple[int, int]:
    """Classify every unordered index pair as concordant, discordant, or tied."""
    concordant = 0
    discordant = 0
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            dx = x[i] - x[j]
            dy = y[i] - y[j]
            if dx * dy > 0:
                concordant += 1
            elif dx * dy < 0:
                discordant += 1
    return concordant, discordant
