"""Command-line interface: ``mdgirth {analyze,solve,verify,enumerate,decompose}``.

Exit status: 0 when every predicate passes, 1 on a predicate failure,
2 on input or usage errors.
"""

import argparse
import csv
import io
import json
import os
import sys

from .errors import GraphError
from .generators import named_graph
from .graph import Graph, encode_graph6, is_connected, parse_edge_list, parse_graph6, read_graph6_lines
from .harness import (
    CHECK_NAMES,
    enumerate_connected_graphs,
    parse_order_range,
    run_corpus,
    verify_graph,
)
from .metric import metric_dimension
from .structure import CycleInfo, ear_decomposition, girth_and_witness, validate_ear_decomposition

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

CSV_FIELDS = [
    "graph_id", "n", "edge_count", "beta", "diameter", "girth",
    "diam_bound", "girth_bound", "family_labels", "two_connected", "passed",
]


class InputError(Exception):
    pass


def _dumps(obj):
    return json.dumps(obj, separators=(", ", ": "))


def load_graph(spec: str, input_format: str = "auto") -> Graph:
    """Resolve a graph argument: a file path, a graph name, or a graph6 string."""
    try:
        if input_format == "name":
            return named_graph(spec)
        if input_format in ("auto", "graph6", "edgelist") and os.path.isfile(spec):
            with open(spec, encoding="ascii") as fh:
                text = fh.read()
            first = text.strip().splitlines()[0] if text.strip() else ""
            if input_format == "edgelist" or (input_format == "auto" and len(first.split()) == 2):
                return parse_edge_list(text)
            for _, item in read_graph6_lines(text.splitlines()):
                if isinstance(item, Exception):
                    raise item
                return item
            raise InputError(f"{spec}: no graph found")
        if input_format == "auto":
            try:
                return named_graph(spec)
            except ValueError:
                pass
        return parse_graph6(spec)
    except (GraphError, ValueError, OSError) as exc:
        raise InputError(str(exc)) from None


def _connected_graph(args) -> Graph:
    g = load_graph(args.graph, args.input_format)
    if not is_connected(g):
        raise InputError("graph is disconnected")
    return g


def _report_text(r) -> str:
    lines = [
        f"graph      {r.graph_id}  (n={r.n}, m={r.edge_count})",
        f"beta       {r.beta}  basis={r.basis}",
        f"diameter   {r.diameter}  n-diam={r.diam_bound}",
        f"girth      {r.girth if r.girth is not None else '-'}  n-g+2={r.girth_bound if r.girth_bound is not None else '-'}",
        f"families   {', '.join(r.family_labels) or '-'}",
        f"2-connected {r.two_connected}",
    ]
    for name in CHECK_NAMES:
        note = r.details.get(name)
        lines.append(f"  {name:<24} {r.checks[name]}" + (f"  [{note}]" if note else ""))
    return "\n".join(lines)


def _csv_row(r) -> dict:
    d = r.to_dict()
    row = {k: d[k] for k in CSV_FIELDS if k in d}
    row["family_labels"] = ";".join(r.family_labels)
    row["passed"] = r.passed
    return row


def cmd_analyze(args, out):
    r = verify_graph(_connected_graph(args))
    if args.format == "json":
        print(_dumps(r.to_dict()), file=out)
    elif args.format == "csv":
        w = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerow(_csv_row(r))
    else:
        print(_report_text(r), file=out)
    return EXIT_OK if r.passed else EXIT_FAIL


def cmd_solve(args, out):
    g = _connected_graph(args)
    res = metric_dimension(g, prune=not args.no_prune)
    if args.format == "json":
        print(_dumps({"n": g.n, "beta": res.beta, "basis": list(res.basis.members)}), file=out)
    elif args.format == "csv":
        print("n,beta,basis", file=out)
        print(f"{g.n},{res.beta},{' '.join(map(str, res.basis.members))}", file=out)
    else:
        print(f"beta = {res.beta}", file=out)
        print(f"basis = {list(res.basis.members)}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    if args.graph6_file:
        source = args.graph6_file
        if not os.path.isfile(source):
            raise InputError(f"cannot read {source}")
    else:
        try:
            source = parse_order_range(args.n or "3..7")
        except ValueError as exc:
            raise InputError(str(exc)) from None
        if source.start < 1 or source.stop - 1 > 7:
            raise InputError("built-in enumeration covers orders 1..7; use --graph6-file beyond that")

    writer = None
    if args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()

    def emit(r):
        if args.format == "json":
            print(_dumps(r.to_dict()), file=out)
        elif writer is not None:
            writer.writerow(_csv_row(r))
        elif not r.passed:
            print(f"FAIL {r.graph_id}: " + "; ".join(f"{k}: {v}" for k, v in r.details.items()), file=out)

    summary = run_corpus(source, jobs=args.jobs, fail_fast=args.fail_fast, on_report=emit)
    for msg in summary.input_errors:
        print(f"input error: {msg}", file=sys.stderr)
    if args.format == "json":
        print(_dumps({"summary": summary.to_dict()}), file=out)
    elif args.format == "text":
        counts = ", ".join(f"n={k}: {v}" for k, v in summary.equality_counts.items()) or "none"
        print(f"checked {summary.graphs_checked} graphs, {len(summary.failures)} failing, "
              f"{len(summary.input_errors)} input errors, {summary.wall_time:.2f}s", file=out)
        print(f"graphs attaining n-g+2: {counts}", file=out)
    if summary.failures:
        return EXIT_FAIL
    return EXIT_INPUT if summary.input_errors else EXIT_OK


def cmd_enumerate(args, out):
    try:
        orders = parse_order_range(args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if orders.start < 1 or orders.stop - 1 > 7:
        raise InputError("built-in enumeration covers orders 1..7")
    if args.format == "csv":
        print("graph6,n,edge_count", file=out)
    for n in orders:
        for g in enumerate_connected_graphs(n):
            code = encode_graph6(g)
            if args.format == "json":
                print(_dumps({"graph6": code, "n": g.n, "edge_count": g.edge_count}), file=out)
            elif args.format == "csv":
                print(f"{code},{g.n},{g.edge_count}", file=out)
            else:
                print(code, file=out)
    return EXIT_OK


def cmd_decompose(args, out):
    g = _connected_graph(args)
    if args.cycle:
        try:
            cyc = tuple(int(x) for x in args.cycle.split(","))
        except ValueError:
            raise InputError("--cycle takes comma-separated vertices") from None
        initial = CycleInfo(len(cyc), cyc)
    else:
        initial = girth_and_witness(g)
        if initial is None:
            print("graph is acyclic; no ear decomposition", file=sys.stderr)
            return EXIT_FAIL
    try:
        d = ear_decomposition(g, initial)
    except GraphError as exc:
        print(f"no ear decomposition: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        raise InputError(str(exc)) from None
    check = validate_ear_decomposition(g, d)
    if args.format == "json":
        print(_dumps({"initial_cycle": list(d.initial_cycle), "ears": [list(e) for e in d.ears],
                      "valid": check.ok}), file=out)
    elif args.format == "csv":
        print("index,kind,vertices", file=out)
        print(f"0,cycle,{' '.join(map(str, d.initial_cycle))}", file=out)
        for i, ear in enumerate(d.ears, start=1):
            print(f"{i},ear,{' '.join(map(str, ear))}", file=out)
    else:
        print("cycle  " + "-".join(map(str, d.initial_cycle + d.initial_cycle[:1])), file=out)
        for i, ear in enumerate(d.ears, start=1):
            print(f"ear {i:<2} " + "-".join(map(str, ear)), file=out)
        print(f"valid: {check.ok} ({check.reason})", file=out)
    return EXIT_OK if check.ok else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="mdgirth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")

    def add_graph(sp):
        sp.add_argument("graph", help="graph6 string, graph name (C5, K4, K2,3, P6, petersen) or file")
        sp.add_argument("--input-format", choices=("auto", "graph6", "edgelist", "name"), default="auto")

    sp = sub.add_parser("analyze", help="full verification report for one graph")
    add_graph(sp)
    add_format(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("solve", help="metric dimension and a basis")
    add_graph(sp)
    add_format(sp)
    sp.add_argument("--no-prune", action="store_true", help="disable twin pruning")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="verify every graph of a corpus")
    src = sp.add_mutually_exclusive_group()
    src.add_argument("--n", help="order or inclusive range A..B for the built-in enumerator (default 3..7)")
    src.add_argument("--graph6-file", help="file with one graph6 string per line")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--fail-fast", action="store_true", help="stop at the first failing graph")
    add_format(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("enumerate", help="one graph6 line per connected isomorphism class")
    sp.add_argument("--n", required=True, help="order or inclusive range A..B")
    add_format(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("decompose", help="ear decomposition from a shortest (or given) cycle")
    add_graph(sp)
    sp.add_argument("--cycle", help="initial cycle as comma-separated vertices")
    add_format(sp)
    sp.set_defaults(func=cmd_decompose)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
