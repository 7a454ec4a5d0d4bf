"""Command-line front end: stats, rank, spread, evaluate.

Every command reads one edge-list file, writes its tables into an output
directory, and drops a ``config.json`` there with the fully resolved
parameters (including the master seed) so any output can be reproduced
byte for byte. Exit codes: 0 success, 1 computation error such as
non-convergence, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from . import __version__
from .centrality import (
    MEASURES,
    ConvergenceError,
    Ranking,
    ScoreVector,
    compute_scores,
    rank,
)
from .effective_distance import effective_distance_matrix
from .epidemics import SIConfig, spreading_power, top_k_infection_curves
from .evaluation import (
    TAU_CONVENTIONS,
    rank_vs_spread,
    tau_vs_beta_sweep,
    top_k_overlap,
)
from .graph import Graph, ParseError, load_edge_list, topology_stats

DEFAULT_BETA = 0.2
DEFAULT_BETA_GRID = "0.2,0.4,0.6,0.8,1.0,1.2,1.4,1.6"
DEFAULT_SPREAD_T_MAX = 20
DEFAULT_SWEEP_T_MAX = 5
DEFAULT_RUNS = 50
DEFAULT_SPREAD_K = 100
DEFAULT_OVERLAP_K = 20


def _parse_measures(value: str) -> list[str]:
    names = [token.strip() for token in value.split(",") if token.strip()]
    if not names:
        raise argparse.ArgumentTypeError(
            f"no measures given; valid names are {', '.join(MEASURES)}"
        )
    unknown = [name for name in names if name not in MEASURES]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown measures {', '.join(unknown)}; valid names are {', '.join(MEASURES)}"
        )
    return names


def _parse_beta_grid(value: str) -> list[float]:
    try:
        betas = [float(token) for token in value.split(",") if token.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad beta grid {value!r}: {exc}") from exc
    if not betas:
        raise argparse.ArgumentTypeError("beta grid must contain at least one value")
    return betas


def _fmt(value) -> str:
    if isinstance(value, float):
        return "inf" if np.isinf(value) else repr(value)
    return str(value)


def _write_csv(path: Path, header: Sequence[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(cell) for cell in row])


def _write_json(path: Path, payload) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write("\n")


def _write_config(out_dir: Path, command: str, args: argparse.Namespace, extra: dict) -> None:
    resolved = {
        "command": command,
        "input": str(args.input),
        "version": __version__,
    }
    resolved.update(extra)
    _write_json(out_dir / "config.json", resolved)


def _out_dir(args: argparse.Namespace) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _load_graph(args: argparse.Namespace) -> Graph:
    graph, report = load_edge_list(args.input)
    if report.loops_dropped or report.duplicates_merged:
        print(
            f"note: dropped {report.loops_dropped} self-loop(s), "
            f"merged {report.duplicates_merged} duplicate edge(s)",
            file=sys.stderr,
        )
    return graph


def _rankings(scores: Mapping[str, ScoreVector]) -> dict[str, Ranking]:
    return {name: rank(sv) for name, sv in scores.items()}


def cmd_stats(args: argparse.Namespace) -> int:
    graph = _load_graph(args)
    stats = topology_stats(graph)
    out = _out_dir(args)
    record = {
        "n": stats.n,
        "m": stats.m,
        "avg_degree": stats.avg_degree,
        "avg_distance": stats.avg_distance,
        "clustering": stats.clustering,
        "assortativity": stats.assortativity,
        "unreachable_pair_fraction": stats.unreachable_pair_fraction,
    }
    if args.format == "json":
        _write_json(out / "stats.json", record)
    else:
        header = list(record)
        row = ["nan" if record[key] is None else _fmt(record[key]) for key in header]
        _write_csv(out / "stats.csv", header, [row])
    _write_config(out, "stats", args, {"format": args.format})
    return 0


def cmd_rank(args: argparse.Namespace) -> int:
    graph = _load_graph(args)
    scores = compute_scores(graph, args.measures, damping=args.damping)
    rankings = _rankings(scores)
    out = _out_dir(args)
    if args.format == "json":
        payload = {
            name: {
                "scores": [float(s) for s in sv.scores],
                "ranking": [graph.labels[i] for i in rankings[name].order],
                "metadata": sv.metadata,
            }
            for name, sv in scores.items()
        }
        _write_json(out / "rank.json", payload)
    else:
        for name, sv in scores.items():
            ranking = rankings[name]
            rows = [
                (graph.labels[node], float(sv.scores[node]), int(ranking.ranks[node]))
                for node in ranking.order
            ]
            _write_csv(out / f"scores_{name}.csv", ["node_label", "score", "rank"], rows)
    _write_config(
        out,
        "rank",
        args,
        {"measures": args.measures, "damping": args.damping, "format": args.format},
    )
    return 0


def cmd_spread(args: argparse.Namespace) -> int:
    graph = _load_graph(args)
    if args.k > graph.n:
        raise ValueError(f"k={args.k} exceeds the graph's {graph.n} nodes")
    distance_matrix = (
        effective_distance_matrix(graph) if "effg" in args.measures else None
    )
    scores = compute_scores(
        graph, args.measures, damping=args.damping, distance_matrix=distance_matrix
    )
    rankings = _rankings(scores)
    config = SIConfig(beta=args.beta, t_max=args.t_max, runs=args.runs, seed=args.seed)
    curves = top_k_infection_curves(
        graph, [(name, rankings[name]) for name in args.measures], args.k, config
    )
    out = _out_dir(args)
    header = ["t"] + [f"F_{name}" for name in args.measures]
    rows = [
        [t] + [float(curves[name][t]) for name in args.measures]
        for t in range(args.t_max + 1)
    ]
    if args.format == "json":
        _write_json(
            out / "spread.json",
            {"t": list(range(args.t_max + 1))}
            | {f"F_{name}": [float(v) for v in curves[name]] for name in args.measures},
        )
    else:
        _write_csv(out / "spread.csv", header, rows)
    _write_config(
        out,
        "spread",
        args,
        {
            "measures": args.measures,
            "beta": args.beta,
            "t_max": args.t_max,
            "runs": args.runs,
            "seed": args.seed,
            "k": args.k,
            "damping": args.damping,
            "format": args.format,
        },
    )
    return 0


def cmd_evaluate(args: argparse.Namespace) -> int:
    graph = _load_graph(args)
    if args.k > graph.n:
        raise ValueError(f"k={args.k} exceeds the graph's {graph.n} nodes")
    distance_matrix = (
        effective_distance_matrix(graph) if "effg" in args.measures else None
    )
    scores = compute_scores(
        graph, args.measures, damping=args.damping, distance_matrix=distance_matrix
    )
    rankings = _rankings(scores)
    out = _out_dir(args)

    sweep_config = SIConfig(
        beta=DEFAULT_BETA, t_max=args.t_max_sweep, runs=args.runs, seed=args.seed
    )
    sweep = tau_vs_beta_sweep(
        graph,
        [scores[name] for name in args.measures],
        args.beta_grid,
        sweep_config,
        convention=args.tau_convention,
    )
    sweep_rows = [
        (name, beta, comparison.tau) for name, beta, comparison in sweep
    ]

    overlap_rows = []
    for i, name_a in enumerate(args.measures):
        for name_b in args.measures[i + 1 :]:
            report = top_k_overlap(rankings[name_a], rankings[name_b], args.k)
            overlap_rows.append((name_a, name_b, report.k, report.shared))

    spread_config = SIConfig(
        beta=args.beta, t_max=args.t_max, runs=args.runs, seed=args.seed
    )
    power = spreading_power(graph, spread_config)
    spread_tables = {}
    for name in args.measures:
        table = rank_vs_spread(graph, rankings[name], spread_config, power=power)
        spread_tables[name] = [
            (position, graph.labels[node], mean_final)
            for position, node, mean_final in table
        ]

    if args.format == "json":
        _write_json(
            out / "evaluate.json",
            {
                "tau_sweep": [
                    {"measure": name, "beta": beta, "tau": tau}
                    for name, beta, tau in sweep_rows
                ],
                "overlap": [
                    {"measure_a": a, "measure_b": b, "k": k, "shared": shared}
                    for a, b, k, shared in overlap_rows
                ],
                "rank_vs_spread": {
                    name: [
                        {"rank": position, "node_label": label, "mean_final": mean_final}
                        for position, label, mean_final in rows
                    ]
                    for name, rows in spread_tables.items()
                },
            },
        )
    else:
        _write_csv(out / "tau_sweep.csv", ["measure", "beta", "tau"], sweep_rows)
        _write_csv(
            out / "overlap.csv", ["measure_a", "measure_b", "k", "shared"], overlap_rows
        )
        for name, rows in spread_tables.items():
            _write_csv(
                out / f"rank_vs_spread_{name}.csv",
                ["rank", "node_label", "mean_final"],
                rows,
            )
    _write_config(
        out,
        "evaluate",
        args,
        {
            "measures": args.measures,
            "beta": args.beta,
            "beta_grid": args.beta_grid,
            "t_max": args.t_max,
            "t_max_sweep": args.t_max_sweep,
            "runs": args.runs,
            "seed": args.seed,
            "k": args.k,
            "tau_convention": args.tau_convention,
            "damping": args.damping,
            "format": args.format,
        },
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="effgravity",
        description="Rank influential network nodes and evaluate rankings "
        "with susceptible-infected spreading simulations.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_common(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--input", required=True, help="edge-list file to analyze")
        sub.add_argument("--out", required=True, help="output directory")
        sub.add_argument(
            "--format", choices=("csv", "json"), default="csv", help="output format"
        )

    def add_measures(sub: argparse.ArgumentParser) -> None:
        sub.add_argument(
            "--measures",
            type=_parse_measures,
            default=list(MEASURES),
            help=f"comma-separated measures, from: {', '.join(MEASURES)}",
        )
        sub.add_argument(
            "--damping",
            type=float,
            default=1.0,
            help="pagerank damping; 1.0 is the undamped update",
        )

    sub = subparsers.add_parser("stats", help="topology statistics")
    add_common(sub)
    sub.set_defaults(func=cmd_stats)

    sub = subparsers.add_parser("rank", help="score and rank nodes per measure")
    add_common(sub)
    add_measures(sub)
    sub.set_defaults(func=cmd_rank)

    sub = subparsers.add_parser(
        "spread", help="seed each measure's top-k nodes and record infection curves"
    )
    add_common(sub)
    add_measures(sub)
    sub.add_argument("--beta", type=float, default=DEFAULT_BETA)
    sub.add_argument("--t-max", type=int, default=DEFAULT_SPREAD_T_MAX)
    sub.add_argument("--runs", type=int, default=DEFAULT_RUNS)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--k", type=int, default=DEFAULT_SPREAD_K)
    sub.set_defaults(func=cmd_spread)

    sub = subparsers.add_parser(
        "evaluate",
        help="tau-vs-beta sweep, pairwise top-k overlap, and rank-vs-spread tables",
    )
    add_common(sub)
    add_measures(sub)
    sub.add_argument(
        "--beta", type=float, default=DEFAULT_BETA, help="beta for rank-vs-spread"
    )
    sub.add_argument(
        "--beta-grid",
        type=_parse_beta_grid,
        default=_parse_beta_grid(DEFAULT_BETA_GRID),
        help="comma-separated betas for the tau sweep (values > 1 are clamped)",
    )
    sub.add_argument(
        "--t-max", type=int, default=DEFAULT_SPREAD_T_MAX, help="horizon for rank-vs-spread"
    )
    sub.add_argument(
        "--t-max-sweep", type=int, default=DEFAULT_SWEEP_T_MAX, help="horizon for the tau sweep"
    )
    sub.add_argument("--runs", type=int, default=DEFAULT_RUNS)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--k", type=int, default=DEFAULT_OVERLAP_K)
    sub.add_argument(
        "--tau-convention", choices=TAU_CONVENTIONS, default="standard"
    )
    sub.set_defaults(func=cmd_evaluate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
