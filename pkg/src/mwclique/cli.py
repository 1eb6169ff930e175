"""Command-line front end: solve, bench, verify, convert.

Exit codes: 0 success, 1 bad flags or any failed benchmark run, 2
instance parse or IO error; verify additionally uses 3 for a vertex set
that is not a clique and 4 for a claimed weight that does not match.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
from pathlib import Path

from .graph import GraphError, WeightedGraph, complement, parse_instance
from .scenario_hash import DEFAULT_PRIME
from .solver import SolverConfig, run_search

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_NOT_CLIQUE = 3
EXIT_WEIGHT_MISMATCH = 4

# CLI mode names use hyphens; the solver API uses underscores
_CLI_MODES = ("trsc", "lscc", "trsc-solution-hash", "trsc-no-restart",
              "scc-no-restart")

CSV_HEADER_COMMENT = "# mwclique bench csv v1"
CSV_COLUMNS = ("instance", "seed", "mode", "best_weight", "time_to_best_ms",
               "steps", "restarts", "restart_period_avg", "w_avg", "error")

_INSTANCE_SUFFIXES = (".clq", ".wclq", ".dimacs")


class _UsageError(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_instance_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("dimacs", "wclq", "auto"),
                   default="auto", help="instance grammar (default auto)")
    p.add_argument("--weights", choices=("mod200", "file", "auto"),
                   default="auto",
                   help="vertex weights: (i mod 200)+1, from v lines, or "
                        "auto (file weights win when present)")
    p.add_argument("--complement", action="store_true",
                   help="solve on the complement graph")


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=_CLI_MODES, default="trsc")
    p.add_argument("--cutoff-seconds", type=float, default=None,
                   metavar="S", help="wall-clock budget per run")
    p.add_argument("--max-steps", type=int, default=None, metavar="N",
                   help="step budget per run (reproducible)")
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME, metavar="P",
                   help="hash modulus")
    p.add_argument("--mark-store", choices=("bitset", "sparse"),
                   default="bitset", help="storage for visited hashes")


def build_parser() -> argparse.ArgumentParser:
    parser = _UsageError(prog="mwclique",
                         description="maximum weight clique local search")
    sub = parser.add_subparsers(dest="command", required=True)

    # add_parser reuses the parent class, so usage errors exit 1 everywhere
    p_solve = sub.add_parser("solve", help="solve one instance")
    p_solve.add_argument("--instance", required=True, metavar="PATH")
    _add_instance_flags(p_solve)
    _add_solver_flags(p_solve)
    p_solve.add_argument("--seed", type=int, default=1)
    p_solve.add_argument("--output", choices=("text", "json"), default="text")

    p_bench = sub.add_parser("bench", help="seeded sweep over instances")
    p_bench.add_argument("paths", nargs="+", metavar="PATH",
                         help="instance files or directories to scan")
    _add_instance_flags(p_bench)
    _add_solver_flags(p_bench)
    p_bench.add_argument("--seeds", default="1..10", metavar="A..B",
                         help="inclusive seed range (default 1..10)")
    p_bench.add_argument("--jobs", type=int, default=1, metavar="K",
                         help="concurrent runs (rows are sorted either way)")
    p_bench.add_argument("--csv", default=None, metavar="PATH",
                         help="write rows to PATH instead of stdout")

    p_verify = sub.add_parser("verify", help="check a solution file")
    p_verify.add_argument("instance", metavar="INSTANCE")
    p_verify.add_argument("solution", metavar="SOLUTION")
    _add_instance_flags(p_verify)

    p_conv = sub.add_parser("convert",
                            help="rewrite an instance in wclq form")
    p_conv.add_argument("--instance", required=True, metavar="PATH")
    _add_instance_flags(p_conv)
    p_conv.add_argument("--out", default=None, metavar="PATH",
                        help="write to PATH instead of stdout")

    return parser


def _load_graph(args) -> WeightedGraph:
    weight_mode = {"mod200": "mod200", "file": "from_file",
                   "auto": "auto"}[args.weights]
    try:
        with open(args.instance, "r", encoding="ascii") as fh:
            graph = parse_instance(fh, weight_mode=weight_mode,
                                   fmt=args.format)
    except OSError as exc:
        raise GraphError(f"cannot read {args.instance}: {exc}") from exc
    if args.complement:
        graph = complement(graph)
    return graph


def _api_mode(cli_mode: str) -> str:
    return cli_mode.replace("-", "_")


def _require_budget(parser, args) -> None:
    if args.max_steps is None and args.cutoff_seconds is None:
        parser.error("set --max-steps, --cutoff-seconds, or both")


def _check_solver_flags(parser, args, seed: int) -> None:
    """Reject bad solver flags with a usage error (exit 1), before any
    instance IO gets a chance to exit 2."""
    probe = SolverConfig(mode=_api_mode(args.mode), seed=seed,
                         max_steps=args.max_steps,
                         cutoff_seconds=args.cutoff_seconds,
                         prime=args.prime, mark_store=args.mark_store)
    try:
        probe.validate(WeightedGraph(1, [], [1]))
    except ValueError as exc:
        parser.error(str(exc))


def _ms(seconds: float | None) -> str:
    return "-" if seconds is None else str(int(round(seconds * 1000)))


def cmd_solve(parser, args) -> int:
    _require_budget(parser, args)
    _check_solver_flags(parser, args, args.seed)
    try:
        graph = _load_graph(args)
        config = SolverConfig(mode=_api_mode(args.mode), seed=args.seed,
                              max_steps=args.max_steps,
                              cutoff_seconds=args.cutoff_seconds,
                              prime=args.prime, mark_store=args.mark_store)
        result = run_search(graph, config)
    except (GraphError, ValueError) as exc:
        print(f"mwclique: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.output == "json":
        t = result.time_to_best
        record = {
            "instance": args.instance,
            "seed": result.seed,
            "mode": args.mode,
            "best_weight": result.best_weight,
            "best_clique": list(result.best_clique),
            "time_to_best": None if t is None else round(t, 3),
            "steps": result.steps,
            "restarts": result.restarts,
            "restart_period_avg": result.restart_period_avg,
        }
        print(json.dumps(record))
    else:
        print(f"instance: {args.instance}")
        print(f"mode: {args.mode}  seed: {result.seed}")
        print(f"best_weight: {result.best_weight}")
        print(f"best_clique: {' '.join(str(v) for v in result.best_clique)}")
        print(f"time_to_best_ms: {_ms(result.time_to_best)}")
        print(f"steps: {result.steps}")
        print(f"restarts: {result.restarts}")
    return EXIT_OK


def _parse_seed_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise ValueError(f"bad seed range {text!r}; expected A..B") from None
    if lo < 0 or hi < lo:
        raise ValueError(f"bad seed range {text!r}; expected 0 <= A <= B")
    return list(range(lo, hi + 1))


def _discover_instances(paths: list[str]) -> list[Path]:
    out: list[Path] = []
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            found = sorted(q for q in p.iterdir()
                           if q.is_file() and q.suffix in _INSTANCE_SUFFIXES)
            out.extend(found)
        else:
            out.append(p)
    return out


def _bench_one(path: str, seed: int, args) -> dict:
    row = {c: "" for c in CSV_COLUMNS}
    row["instance"] = path
    row["seed"] = str(seed)
    row["mode"] = args.mode
    try:
        local = argparse.Namespace(instance=path, format=args.format,
                                   weights=args.weights,
                                   complement=args.complement)
        graph = _load_graph(local)
        config = SolverConfig(mode=_api_mode(args.mode), seed=seed,
                              max_steps=args.max_steps,
                              cutoff_seconds=args.cutoff_seconds,
                              prime=args.prime, mark_store=args.mark_store)
        result = run_search(graph, config)
    except (GraphError, ValueError, RuntimeError) as exc:
        row["error"] = str(exc).replace("\n", " ")
        return row
    row["best_weight"] = str(result.best_weight)
    row["time_to_best_ms"] = ("" if result.time_to_best is None
                              else str(int(round(result.time_to_best * 1000))))
    row["steps"] = str(result.steps)
    row["restarts"] = str(result.restarts)
    row["restart_period_avg"] = ("" if result.restart_period_avg is None
                                 else str(result.restart_period_avg))
    return row


def cmd_bench(parser, args) -> int:
    _require_budget(parser, args)
    try:
        seeds = _parse_seed_range(args.seeds)
    except ValueError as exc:
        parser.error(str(exc))
    _check_solver_flags(parser, args, seeds[0])
    if args.jobs < 1:
        parser.error(f"--jobs must be >= 1, got {args.jobs}")
    instances = _discover_instances(args.paths)
    if not instances:
        print("mwclique: no instances found", file=sys.stderr)
        return EXIT_PARSE

    jobs = [(str(path), seed) for path in instances for seed in seeds]
    if args.jobs == 1:
        rows = [_bench_one(path, seed, args) for path, seed in jobs]
    else:
        with concurrent.futures.ThreadPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(lambda js: _bench_one(js[0], js[1], args),
                                 jobs))
    # deterministic emission order: instance path, then seed
    rows.sort(key=lambda r: (r["instance"], int(r["seed"])))

    out_rows: list[dict] = []
    for path in sorted(str(p) for p in instances):
        per = [r for r in rows if r["instance"] == path]
        out_rows.extend(per)
        good = [int(r["best_weight"]) for r in per if not r["error"]]
        summary = {c: "" for c in CSV_COLUMNS}
        summary["instance"] = path
        summary["seed"] = "summary"
        summary["mode"] = args.mode
        if good:
            summary["best_weight"] = str(max(good))
            summary["w_avg"] = str(sum(good) / len(good))
        out_rows.append(summary)

    lines = [CSV_HEADER_COMMENT, ",".join(CSV_COLUMNS)]
    lines.extend(",".join(row[c] for c in CSV_COLUMNS) for row in out_rows)
    text = "\n".join(lines) + "\n"
    if args.csv is None:
        sys.stdout.write(text)
    else:
        Path(args.csv).write_text(text, encoding="ascii")
    errored = any(r["error"] for r in rows)
    return EXIT_USAGE if errored else EXIT_OK


def _read_solution(path: str) -> tuple[list[int], int | None]:
    """Solution grammar: 'c' lines are comments; remaining lines hold
    integers.  With two or more data lines, a final line holding exactly
    one integer is the claimed weight; everything else lists vertices."""
    with open(path, "r", encoding="ascii") as fh:
        data_lines = []
        for line in fh:
            stripped = line.strip()
            if not stripped or stripped.startswith("c"):
                continue
            data_lines.append(stripped.split())
    if not data_lines:
        raise ValueError("solution file has no data lines")
    claimed: int | None = None
    if len(data_lines) >= 2 and len(data_lines[-1]) == 1:
        claimed = int(data_lines[-1][0])
        data_lines = data_lines[:-1]
    vertices = [int(tok) for line in data_lines for tok in line]
    return vertices, claimed


def cmd_verify(parser, args) -> int:
    try:
        graph = _load_graph(args)
        vertices, claimed = _read_solution(args.solution)
    except (GraphError, ValueError, OSError) as exc:
        print(f"mwclique: {exc}", file=sys.stderr)
        return EXIT_PARSE
    seen: set[int] = set()
    for v in vertices:
        if not 1 <= v <= graph.n:
            print(f"not a clique: vertex {v} out of range 1..{graph.n}")
            return EXIT_NOT_CLIQUE
        if v in seen:
            print(f"not a clique: vertex {v} listed twice")
            return EXIT_NOT_CLIQUE
        seen.add(v)
    ordered = sorted(seen)
    for i, u in enumerate(ordered):
        for v in ordered[i + 1:]:
            if not graph.has_edge(u, v):
                print(f"not a clique: {u} and {v} are not adjacent")
                return EXIT_NOT_CLIQUE
    weight = sum(int(graph.weights[v]) for v in ordered)
    if claimed is not None and claimed != weight:
        print(f"weight mismatch: claimed {claimed}, actual {weight}")
        return EXIT_WEIGHT_MISMATCH
    print(f"ok: clique of {len(ordered)} vertices, weight {weight}")
    return EXIT_OK


def cmd_convert(parser, args) -> int:
    """Normalize an instance: weights materialized, edges deduplicated and
    listed once as 'e u v' with u < v in ascending order."""
    try:
        graph = _load_graph(args)
    except GraphError as exc:
        print(f"mwclique: {exc}", file=sys.stderr)
        return EXIT_PARSE
    lines = [f"p edge {graph.n} {graph.m}"]
    lines.extend(f"v {v} {graph.weight_of(v)}" for v in range(1, graph.n + 1))
    for u in range(1, graph.n + 1):
        lines.extend(f"e {u} {v}" for v in graph.neighbors(u) if u < v)
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="ascii")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "solve":
            return cmd_solve(parser, args)
        if args.command == "bench":
            return cmd_bench(parser, args)
        if args.command == "convert":
            return cmd_convert(parser, args)
        return cmd_verify(parser, args)
    except SystemExit as exc:
        # --help and usage errors funnel through here with their code
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
