"""Command-line interface: generate graphs, build products, compute domination
numbers, run rule-vs-oracle scans, and hunt conjecture counterexamples.

Standard output carries data only; diagnostics go to standard error.  ``check``
exits nonzero only when a proven bound is violated (or on a crash); exact-value
discrepancies are reported and counted but exit 0.
"""

from __future__ import annotations

import argparse
import json
import sys

from .formats import Graph6Error, parse_graph6, to_dot, to_edgelist, to_graph6
from .graphs import Graph, generate
from .ops import HajosSpec, corona, hajos_sum, join, neighbourhood_corona
from .solver import coeven_domination_number, domination_number
from .verify import ScanConfig, conjecture_scan, run_family_scan


def _render(g: Graph, fmt: str) -> str:
    if fmt == "g6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    return to_dot(g)


def _read_graph_arg(arg: str) -> list[str]:
    """An inline graph6 string, or @path for a file with one graph per line."""
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return [line.strip() for line in fh if line.strip()]
    return [arg]


def _parse_edge(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"edge must be written u,v (got {text!r})")
    return int(parts[0]), int(parts[1])


def _cmd_gen(args: argparse.Namespace) -> int:
    g = generate(args.family, *args.params)
    sys.stdout.write(_render(g, args.format))
    return 0


def _cmd_op(args: argparse.Namespace) -> int:
    g = parse_graph6(_read_graph_arg(args.g)[0])
    h = parse_graph6(_read_graph_arg(args.h)[0])
    if args.kind == "hajos":
        if args.e1 is None or args.e2 is None:
            raise ValueError("hajos requires --e1 and --e2")
        spec = HajosSpec(_parse_edge(args.e1), _parse_edge(args.e2))
        product, index_map = hajos_sum(g, h, spec)
    else:
        builder = {"join": join, "corona": corona, "ncorona": neighbourhood_corona}[args.kind]
        product, index_map = builder(g, h)
    if args.map:
        doc = {"graph": _render(product, args.format).rstrip("\n"), "format": args.format,
               "index_map": index_map.to_dicts()}
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_render(product, args.format))
    return 0


def _cmd_compute(args: argparse.Namespace) -> int:
    solve = domination_number if args.kind == "gamma" else coeven_domination_number
    for line in _read_graph_arg(args.graph):
        g = parse_graph6(line)
        result = solve(g)
        doc: dict = {"value": result.value}
        if args.witness:
            doc["witness"] = list(result.witness.members)
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    families = tuple(f.strip() for f in args.families.split(",") if f.strip())
    config = ScanConfig(op=args.op, families=families, max_n=args.max_n)
    report = run_family_scan(config)
    report.write_json(args.out)
    summary = report.summary
    sys.stdout.write(
        " ".join(f"{k}={summary[k]}" for k in (
            "instances", "match", "bound_holds", "bound_tight",
            "discrepancy", "not_applicable", "skipped", "proven_violations",
        )) + "\n"
    )
    if summary["discrepancy"]:
        print(f"note: {summary['discrepancy']} discrepancy entries recorded in {args.out}", file=sys.stderr)
    return 1 if summary["proven_violations"] else 0


def _cmd_scan_conjecture(args: argparse.Namespace) -> int:
    report = conjecture_scan(max_n=args.max_n, budget_s=args.budget)
    report.write_json(args.out)
    s = report.summary
    sys.stdout.write(
        f"checked={s['checked']} min_slack={s['min_slack']} "
        f"min_slack_instance={s['min_slack_instance']!r} "
        f"counterexamples={s['counterexamples']} incomplete={str(s['incomplete']).lower()}\n"
    )
    for e in report.entries:
        sys.stdout.write(f"counterexample: {e.instance_id} {e.note}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coeven",
        description="Co-even domination under join, corona, neighbourhood corona, and Hajos sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="emit one named-family graph")
    p_gen.add_argument("family")
    p_gen.add_argument("params", nargs="*", type=int)
    p_gen.add_argument("--format", choices=("g6", "edgelist", "dot"), default="g6")
    p_gen.set_defaults(func=_cmd_gen)

    p_op = sub.add_parser("op", help="build a binary product of two graphs")
    p_op.add_argument("kind", choices=("join", "corona", "ncorona", "hajos"))
    p_op.add_argument("--g", required=True, help="left factor: graph6 or @file")
    p_op.add_argument("--h", required=True, help="right factor: graph6 or @file")
    p_op.add_argument("--e1", help="oriented edge x1,y1 of the left factor (hajos)")
    p_op.add_argument("--e2", help="oriented edge x2,y2 of the right factor (hajos)")
    p_op.add_argument("--format", choices=("g6", "edgelist", "dot"), default="g6")
    p_op.add_argument("--map", action="store_true", help="emit JSON with the index map")
    p_op.set_defaults(func=_cmd_op)

    p_compute = sub.add_parser("compute", help="exact domination numbers")
    p_compute.add_argument("--graph", required=True, help="graph6 or @file (one graph per line)")
    p_compute.add_argument("--kind", choices=("gamma", "coeven"), required=True)
    p_compute.add_argument("--witness", action="store_true")
    p_compute.set_defaults(func=_cmd_compute)

    p_check = sub.add_parser("check", help="scan instance families against the oracle")
    p_check.add_argument("--op", required=True, choices=("join", "corona", "ncorona", "hajos", "regular"))
    p_check.add_argument("--max-n", type=int, default=4, dest="max_n")
    p_check.add_argument("--families", default="enumerated", help="comma list: enumerated,generators")
    p_check.add_argument("--out", required=True)
    p_check.set_defaults(func=_cmd_check)

    p_scan = sub.add_parser("scan-conjecture", help="hunt conjectured-lower-bound counterexamples")
    p_scan.add_argument("--max-n", type=int, default=4, dest="max_n")
    p_scan.add_argument("--budget", type=float, default=600.0, help="wall-clock budget in seconds")
    p_scan.add_argument("--out", required=True)
    p_scan.set_defaults(func=_cmd_scan_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
