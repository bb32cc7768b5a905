"""Command-line entry point: ``rrsplit {solve,bench,verify,oracle}``.

Exit codes: 0 success (optimal / valid), 1 bad input or flags, 2 a search
limit was hit, 3 mapping rejected by ``verify``.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from pathlib import Path
from typing import Sequence

from .formats import (
    FORMATS,
    FormatError,
    ReportRow,
    csv_header,
    csv_row,
    format_mapping,
    parse_mapping,
    read_graph,
)
from .graph import GraphError
from .oracle import brute_force_mcs, verify_mapping
from .solver import DEFAULT_TIME_LIMIT, OPTIMAL, VARIANTS, SolverConfig, solve

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_LIMIT = 2
EXIT_INVALID = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _algo_list(text: str) -> list[str]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    unknown = [n for n in names if n not in VARIANTS]
    if not names or unknown:
        raise argparse.ArgumentTypeError(f"choose from {', '.join(VARIANTS)}")
    return names


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", required=True, type=Path, help="first graph (pattern)")
    p.add_argument("--g", required=True, type=Path, help="second graph (target)")
    p.add_argument("--format", choices=FORMATS, default="edgelist")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rrsplit", description="Maximum common induced subgraph search.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve one instance")
    _add_instance_args(p)
    p.add_argument("--algo", choices=("mcsplit", "rrsplit"), default="rrsplit")
    p.add_argument("--no-ve", action="store_true", help="disable vertex-equivalence reductions")
    p.add_argument("--no-mb", action="store_true", help="disable the maximality reduction")
    p.add_argument("--no-ub", action="store_true", help="use the plain bound instead of the exclusion-aware one")
    p.add_argument("--time-limit", type=_positive_float, default=DEFAULT_TIME_LIMIT)
    p.add_argument("--branch-limit", type=_positive_int)
    p.add_argument("--seed", type=int, help="pick bound representatives at random with this seed")
    p.add_argument("--csv", action="store_true", help="print a CSV row instead of the human summary")
    p.add_argument("--mapping-out", type=Path, help="also write the mapping as 'u v' lines")

    p = sub.add_parser("bench", help="run algorithms over every instance pair of a directory")
    p.add_argument("--dir", required=True, type=Path)
    p.add_argument("--pairing", choices=("all", "qg"), default="all")
    p.add_argument("--algos", required=True, type=_algo_list, help=f"comma list of {', '.join(VARIANTS)}")
    p.add_argument("--time-limit", required=True, type=_positive_float)
    p.add_argument("--branch-limit", type=_positive_int)
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("--jobs", type=_positive_int, default=1)

    p = sub.add_parser("verify", help="check a mapping file is a common induced subgraph")
    _add_instance_args(p)
    p.add_argument("--mapping", required=True, type=Path)

    p = sub.add_parser("oracle", help="brute-force answer for tiny instances (testing aid)")
    _add_instance_args(p)
    return parser


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_ERROR


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        Q = read_graph(args.q, args.format)
        G = read_graph(args.g, args.format)
        cfg = SolverConfig(
            algorithm=args.algo,
            ve_reductions=not args.no_ve,
            maximality=not args.no_mb,
            ve_bound=not args.no_ub,
            time_limit=args.time_limit,
            branch_limit=args.branch_limit,
            rep_policy="random" if args.seed is not None else "smallest",
            seed=args.seed,
        )
        report = solve(Q, G, cfg)
    except (OSError, GraphError, ValueError) as exc:
        return _fail(str(exc))

    name = _variant_name(cfg)
    if args.csv:
        sys.stdout.write(csv_header())
        sys.stdout.write(csv_row(ReportRow(f"{args.q.name}:{args.g.name}", name, Q.n, G.n, report)))
    else:
        print(f"size {report.best_size}")
        for u, v in report.best_mapping:
            print(f"{u}->{v}")
        print(f"branches {report.branches}")
        print(f"elapsed {report.elapsed:.6f}")
        print(f"terminated {report.terminated}")
    if args.mapping_out is not None:
        args.mapping_out.write_text(format_mapping(report.best_mapping), encoding="utf-8")
    return EXIT_OK if report.terminated == OPTIMAL else EXIT_LIMIT


def _variant_name(cfg: SolverConfig) -> str:
    if cfg.algorithm == "mcsplit":
        return "mcsplit"
    off = [tag for tag, on in (("ve", cfg.ve_reductions), ("mb", cfg.maximality), ("ub", cfg.ve_bound)) if not on]
    return "-".join(["rrsplit", *off])


def _instance_pairs(directory: Path, pairing: str) -> list[tuple[Path, Path]]:
    def graph_files(d: Path) -> list[Path]:
        if not d.is_dir():
            return []
        return sorted(p for p in d.iterdir() if p.is_file() and not p.name.startswith("."))

    if pairing == "qg":
        return [(q, g) for q in graph_files(directory / "pattern") for g in graph_files(directory / "target")]
    return list(combinations(graph_files(directory), 2))


def _bench_one(job: tuple[Path, Path, str, str, float, int | None]) -> ReportRow:
    q_path, g_path, fmt, algo, time_limit, branch_limit = job
    Q = read_graph(q_path, fmt)
    G = read_graph(g_path, fmt)
    cfg = SolverConfig.variant(algo, time_limit=time_limit, branch_limit=branch_limit)
    return ReportRow(f"{q_path.name}:{g_path.name}", algo, Q.n, G.n, solve(Q, G, cfg))


def cmd_bench(args: argparse.Namespace) -> int:
    pairs = _instance_pairs(args.dir, args.pairing)
    if not pairs:
        return _fail(f"no instance pairs found under {args.dir}")
    # parse everything up front so a bad file fails before any output
    try:
        for path in {p for pair in pairs for p in pair}:
            read_graph(path, args.format)
    except (OSError, GraphError) as exc:
        return _fail(str(exc))

    jobs = [(q, g, args.format, algo, args.time_limit, args.branch_limit) for q, g in pairs for algo in args.algos]
    out = sys.stdout
    out.write(csv_header())
    out.flush()
    if args.jobs == 1:
        for job in jobs:
            out.write(csv_row(_bench_one(job)))
            out.flush()
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for row in pool.map(_bench_one, jobs):
                out.write(csv_row(row))
                out.flush()
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        Q = read_graph(args.q, args.format)
        G = read_graph(args.g, args.format)
        pairs = parse_mapping(args.mapping.read_text(encoding="utf-8"))
    except (OSError, GraphError) as exc:
        return _fail(str(exc))
    if verify_mapping(Q, G, pairs):
        print(f"valid common induced subgraph of size {len(pairs)}")
        return EXIT_OK
    print("invalid mapping", file=sys.stderr)
    return EXIT_INVALID


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        Q = read_graph(args.q, args.format)
        G = read_graph(args.g, args.format)
        size, mapping = brute_force_mcs(Q, G)
    except (OSError, GraphError, ValueError) as exc:
        return _fail(str(exc))
    print(f"size {size}")
    for u, v in mapping:
        print(f"{u}->{v}")
    return EXIT_OK


COMMANDS = {"solve": cmd_solve, "bench": cmd_bench, "verify": cmd_verify, "oracle": cmd_oracle}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
