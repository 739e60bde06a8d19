"""Command-line front end.

Exit codes: 0 yes / success, 3 no / rejected, 2 input error, 4 oracle budget
exceeded; ``audit`` exits 1 when it finds a counterexample.
"""

from __future__ import annotations

import argparse
import gc
import json
import math
import os
import statistics
import sys
import time
from dataclasses import asdict, dataclass

from .algorithm import MODES, s_eulerian_trail, verify_trail
from .generate import bench_instance, connected_subcubic_graphs, random_graph, random_instance, random_subcubic
from .graphcore import (
    Graph,
    GraphError,
    Subgraph,
    Trail,
    is_connected,
    parse_graph,
    parse_subgraph,
    parse_trail,
    serialize_graph,
    serialize_subgraph,
    serialize_trail,
)
from .oracle import BudgetExceeded, OracleBudget, oracle_s_eulerian
from .reductions import answer_hp_query, check_hp_spanning_trail_equivalence, hc_to_hp_queries, is_subcubic

EXIT_YES, EXIT_COUNTEREXAMPLE, EXIT_INPUT, EXIT_NO, EXIT_BUDGET = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    n: int
    m: int
    hv: int
    he: int
    mode: str
    answer: str
    trail: dict | None = None
    micros: int = 0
    seed: int | None = None
    route: str = "algorithm"

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False)


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(args) -> tuple[Graph, Subgraph]:
    if not args.graph or not args.sub:
        raise InputError("--graph and --sub are required")
    g = parse_graph(_read(args.graph))
    return g, parse_subgraph(_read(args.sub), g)


def _budget(args) -> OracleBudget:
    return OracleBudget(time_limit=float(args.budget_ms)) if args.budget_ms else OracleBudget()


def _trail_dict(t: Trail) -> dict:
    return {"start": t.start, "closed": t.closed, "steps": list(t.steps)}


def _solve(args, command: str, force_oracle: bool) -> tuple[RunReport, Trail | None]:
    g, h = _load(args)
    route = "oracle" if force_oracle or not is_connected(h) else "algorithm"
    t0 = time.perf_counter()
    if route == "oracle":
        trail = oracle_s_eulerian(g, h, args.mode, _budget(args))
    else:
        trail = s_eulerian_trail(g, h, args.mode)
    micros = int((time.perf_counter() - t0) * 1e6)
    report = RunReport(
        command=command,
        n=g.n,
        m=g.m,
        hv=len(h.vertices),
        he=len(h.edge_ids),
        mode=args.mode,
        answer="yes" if trail is not None else "no",
        micros=micros,
        seed=args.seed,
        route=route,
    )
    if route == "oracle" and not force_oracle:
        print("note: H is not connected; answered by the exhaustive oracle", file=sys.stderr)
    return report, trail


def cmd_decide(args) -> int:
    report, _ = _solve(args, "decide", args.oracle)
    print(report.to_json() if args.json else report.answer.upper())
    return EXIT_YES if report.answer == "yes" else EXIT_NO


def _cmd_with_trail(args, command: str, force_oracle: bool) -> int:
    report, trail = _solve(args, command, force_oracle)
    if trail is not None:
        report.trail = _trail_dict(trail)
    if args.json:
        print(report.to_json())
    elif trail is None:
        print("NO")
    else:
        sys.stdout.write(serialize_trail(trail))
    return EXIT_YES if trail is not None else EXIT_NO


def cmd_trail(args) -> int:
    return _cmd_with_trail(args, "trail", args.oracle)


def cmd_oracle(args) -> int:
    return _cmd_with_trail(args, "oracle", True)


def cmd_verify(args) -> int:
    g, h = _load(args)
    if not args.trail:
        raise InputError("--trail is required")
    t = parse_trail(_read(args.trail), g)
    verdict = verify_trail(g, h, t, args.mode)
    if args.json:
        report = RunReport("verify", g.n, g.m, len(h.vertices), len(h.edge_ids), args.mode,
                           "yes" if verdict else "no", trail=_trail_dict(t) if verdict else None,
                           seed=args.seed, route="verifier")
        print(report.to_json())
    else:
        print("OK" if verdict else "REJECTED")
    if not verdict:
        print(verdict.diagnostic, file=sys.stderr)
        return EXIT_NO
    return EXIT_YES


def cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else 0
    n = args.n
    try:
        if args.kind == "random":
            m = args.m if args.m is not None else min(n, n * (n - 1) // 2)
            g, h = random_graph(n, m, seed), None
        elif args.kind == "subcubic":
            m = args.m if args.m is not None else min(n, 3 * n // 2, n * (n - 1) // 2)
            g, h = random_subcubic(n, m, seed), None
        else:
            m = args.m if args.m is not None else 2 * n
            g, h = random_instance(n, m, seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.out:
        with open(args.out + ".graph", "w") as fh:
            fh.write(serialize_graph(g))
        if h is not None:
            with open(args.out + ".sub", "w") as fh:
                fh.write(serialize_subgraph(h))
    else:
        if h is not None:
            raise InputError("kind=instance writes two files; pass --out PREFIX")
        sys.stdout.write(serialize_graph(g))
    return EXIT_YES


def loglog_slope(sizes: list[int], times: list[float]) -> float:
    xs = [math.log(s) for s in sizes]
    ys = [math.log(t) for t in times]
    mx, my = statistics.fmean(xs), statistics.fmean(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


def run_bench(sizes: list[int], trials: int, seed: int, mode: str = "closed") -> tuple[list[dict], float | None]:
    """Median wall-clock of the pipeline per size, plus the fitted log-log slope."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if sizes != sorted(sizes) or len(set(sizes)) != len(sizes):
        raise ValueError("sizes must be strictly ascending")
    g, h = bench_instance(100, seed)
    s_eulerian_trail(g, h, mode)  # compile kernels outside the timed region
    rows = []
    for size in sizes:
        samples = []
        for i in range(trials):
            g, h = bench_instance(size, seed + i)
            gc_was_enabled = gc.isenabled()
            gc.disable()
            try:
                t0 = time.perf_counter()
                trail = s_eulerian_trail(g, h, mode)
                samples.append(time.perf_counter() - t0)
            finally:
                if gc_was_enabled:
                    gc.enable()
            if trail is None:
                raise RuntimeError(f"benchmark instance m={size} seed={seed + i} is infeasible")
        rows.append({"m": size, "n": g.n, "median_s": statistics.median(samples), "trials": trials})
    slope = loglog_slope(sizes, [r["median_s"] for r in rows]) if len(sizes) > 1 else None
    return rows, slope


def cmd_bench(args) -> int:
    try:
        sizes = [int(float(s)) for s in args.sizes.split(",") if s.strip()]
        rows, slope = run_bench(sizes, args.trials, args.seed if args.seed is not None else 0, args.mode)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.json:
        print(json.dumps({"command": "bench", "rows": rows, "slope": slope, "seed": args.seed}))
    else:
        print(f"{'m':>10} {'n':>9} {'median_ms':>10}")
        for r in rows:
            print(f"{r['m']:>10} {r['n']:>9} {r['median_s'] * 1e3:>10.2f}")
        if slope is not None:
            print(f"slope {slope:.3f}")
    return EXIT_YES


def cmd_audit(args) -> int:
    budget = _budget(args)
    graphs = list(connected_subcubic_graphs(args.max_n, min_n=2)) if args.max_n >= 2 else []
    for path in args.graph_files or []:
        graphs.append(parse_graph(_read(path)))
    found = 0
    checked = 0
    for g in graphs:
        if not is_subcubic(g):
            print(f"skipped non-subcubic graph n={g.n} m={g.m}", file=sys.stderr)
            continue
        res = check_hp_spanning_trail_equivalence(g, budget)
        checked += 1
        print(res.report_line())
        if not res.consistent:
            found += 1
            print(f"COUNTEREXAMPLE {res.details()}", file=sys.stderr)
    print(f"audited {checked} graphs, {found} counterexample(s)", file=sys.stderr)
    return EXIT_COUNTEREXAMPLE if found else EXIT_YES


def cmd_reduce_hc(args) -> int:
    if not args.graph:
        raise InputError("--graph is required")
    g = parse_graph(_read(args.graph))
    budget = _budget(args)
    any_yes = False
    for q in hc_to_hp_queries(g):
        ans = answer_hp_query(q, budget) is not None
        any_yes |= ans
        print(f"q {q.deleted} {q.s} {q.t} {int(ans)}")
    print("YES" if any_yes else "NO")
    return EXIT_YES if any_yes else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="graph file ('p n m' / 'e u v' lines)")
    common.add_argument("--sub", help="subgraph file ('v x' / 's e' lines)")
    common.add_argument("--mode", choices=MODES, default="closed")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--budget-ms", type=int, default=None, help="oracle time limit")

    parser = argparse.ArgumentParser(prog="seulerian", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common], help="answer YES/NO")
    p.add_argument("--oracle", action="store_true", help="force the exhaustive oracle")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("trail", parents=[common], help="print a covering trail")
    p.add_argument("--oracle", action="store_true", help="force the exhaustive oracle")
    p.set_defaults(func=cmd_trail)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive search, prints a trail")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="check a trail file")
    p.add_argument("--trail", help="trail file ('t closed|open s' / 'e id' lines)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="generate graphs or instances")
    p.add_argument("--kind", choices=("random", "subcubic", "instance"), default="random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--out", help="output prefix; writes PREFIX.graph (and PREFIX.sub)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common], help="time the linear pipeline")
    p.add_argument("--sizes", default="10000,100000,1000000")
    p.add_argument("--trials", type=int, default=5)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("audit", parents=[common], help="Hamiltonian path vs spanning trail audit")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("graph_files", nargs="*", help="extra graphs to audit")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("reduce-hc", parents=[common], help="Hamiltonian cycle via per-edge path queries")
    p.set_defaults(func=cmd_reduce_hc)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_YES


if __name__ == "__main__":
    sys.exit(main())
