"""Comparing rankings against each other and against simulated spreading.

Kendall's tau here counts strictly concordant and strictly discordant pairs
only; pairs tied in either coordinate count toward neither. Two denominator
conventions are provided: "standard" divides by the number of unordered
pairs N(N-1)/2 (so |tau| <= 1), "ordered-pairs" divides by N(N-1) (so
|tau| <= 0.5).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .centrality import Ranking, ScoreVector
from .epidemics import SIConfig, spreading_power
from .graph import Graph

TAU_CONVENTIONS = ("standard", "ordered-pairs")


@dataclass(frozen=True)
class RankComparison:
    """Tau plus the raw pair counts it was built from."""

    tau: float
    concordant: int
    discordant: int
    pairs_total: int
    convention: str

    @property
    def degenerate(self) -> bool:
        """True when every pair was tied, leaving tau uninformative."""
        return self.concordant == 0 and self.discordant == 0


@dataclass(frozen=True)
class OverlapReport:
    """Size of the intersection of two rankings' top-k node sets."""

    k: int
    shared: int


def kendall_tau(
    x: Sequence[float], y: Sequence[float], convention: str = "standard"
) -> RankComparison:
    """Count concordant/discordant pairs of (x, y) and normalize to tau."""
    if convention not in TAU_CONVENTIONS:
        raise ValueError(
            f"unknown convention {convention!r}; choose from {TAU_CONVENTIONS}"
        )
    xs = np.asarray(x, dtype=np.float64)
    ys = np.asarray(y, dtype=np.float64)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise ValueError(f"sequences must be 1-d and equal length, got {xs.shape} and {ys.shape}")
    n = xs.size
    if n < 2:
        raise ValueError(f"need at least two elements, got {n}")
    concordant = 0
    discordant = 0
    for i in range(n - 1):
        sign = np.sign(xs[i + 1 :] - xs[i]) * np.sign(ys[i + 1 :] - ys[i])
        concordant += int((sign > 0).sum())
        discordant += int((sign < 0).sum())
    pairs_total = n * (n - 1) // 2
    denominator = n * (n - 1) if convention == "ordered-pairs" else pairs_total
    return RankComparison(
        tau=(concordant - discordant) / denominator,
        concordant=concordant,
        discordant=discordant,
        pairs_total=pairs_total,
        convention=convention,
    )


def top_k_overlap(a: Ranking, b: Ranking, k: int) -> OverlapReport:
    """How many nodes the two rankings' top-k sets have in common."""
    if a.order.size != b.order.size:
        raise ValueError(
            f"rankings cover different node sets ({a.order.size} vs {b.order.size} nodes)"
        )
    if not 0 <= k <= a.order.size:
        raise ValueError(f"k={k} out of range for {a.order.size} nodes")
    shared = len(set(map(int, a.top(k))) & set(map(int, b.top(k))))
    return OverlapReport(k=k, shared=shared)


def clamp_betas(betas: Sequence[float]) -> list[float]:
    """Clamp transmission probabilities above 1 down to 1, with a warning."""
    clamped = []
    over = []
    for beta in betas:
        if beta < 0.0:
            raise ValueError(f"beta must be >= 0, got {beta}")
        if beta > 1.0:
            over.append(beta)
            beta = 1.0
        clamped.append(float(beta))
    if over:
        warnings.warn(
            f"beta values {over} exceed 1 and were clamped to 1 "
            "(transmission is a per-contact probability)",
            stacklevel=2,
        )
    return clamped


def tau_vs_beta_sweep(
    graph: Graph,
    score_vectors: Sequence[ScoreVector],
    betas: Sequence[float],
    config: SIConfig,
    convention: str = "standard",
) -> list[tuple[str, float, RankComparison]]:
    """Correlate each measure with simulated spreading power across betas.

    For every beta the single-seed spreading power of all nodes is computed
    once (config.beta is replaced by the clamped beta) and each measure's
    score vector is correlated against it. Rows keep the requested beta
    values; order is (beta, measure).
    """
    requested = list(betas)
    clamped = clamp_betas(requested)
    rows: list[tuple[str, float, RankComparison]] = []
    for beta_requested, beta in zip(requested, clamped):
        ground_truth = spreading_power(graph, replace(config, beta=beta))
        for sv in score_vectors:
            comparison = kendall_tau(sv.scores, ground_truth, convention=convention)
            rows.append((sv.measure, float(beta_requested), comparison))
    return rows


def rank_vs_spread(
    graph: Graph,
    ranking: Ranking,
    config: SIConfig,
    power: np.ndarray | None = None,
) -> list[tuple[int, int, float]]:
    """Single-seed mean final infected count per node, emitted in rank order.

    Rows are (rank, node index, mean final infected count); a ranking that
    tracks true influence produces a mostly decreasing third column. Pass a
    precomputed ``power`` vector to amortize the simulation across several
    rankings under the same config.
    """
    if ranking.order.size != graph.n:
        raise ValueError(
            f"ranking covers {ranking.order.size} nodes, graph has {graph.n}"
        )
    if power is None:
        power = spreading_power(graph, config)
    elif power.shape != (graph.n,):
        raise ValueError(f"power vector shape {power.shape} does not match n={graph.n}")
    return [
        (position + 1, int(node), float(power[node]))
        for position, node in enumerate(ranking.order)
    ]
