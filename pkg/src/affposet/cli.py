"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 domain error (bad type, labels,
shift, or a cell mismatch), 3 verification found mismatches.  Payloads are
printed to stdout as sorted, indented JSON so identical invocations produce
identical bytes; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from .cartan import build_affine, catalog_types, parse_type_id
from .covering import cocovers, covers, edge_to_json, special_vertices
from .oracle import SearchWindow, verify_covering
from .poset import basic_cell, export_graph, interval
from .weights import format_shift, parse_shift, weight_from_labels, labels

__all__ = ["run", "main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _labels_arg(text: str, diagram):
    parts = [p.strip() for p in text.split(",")]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"labels must be comma separated integers, got {text!r}")
    if len(vals) != diagram.n + 1:
        raise ValueError(
            f"{diagram} has {diagram.n + 1} vertices, got {len(vals)} labels"
        )
    return tuple(vals)


def _weight_arg(type_text: str, labels_text: str, shift_text):
    diagram = build_affine(parse_type_id(type_text))
    shift = parse_shift(shift_text) if shift_text else 0
    return weight_from_labels(diagram, _labels_arg(labels_text, diagram), shift)


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _cmd_types(args) -> int:
    for name in catalog_types():
        print(name)
    return 0


def _cmd_info(args) -> int:
    diagram = build_affine(parse_type_id(args.type))
    _emit(
        {
            "type": str(diagram.type_id),
            "vertices": diagram.n + 1,
            "cartan": [list(row) for row in diagram.cartan],
            "marks": list(diagram.marks),
            "comarks": list(diagram.comarks),
            "root_length_sq": [format_shift(v) for v in diagram.root_length_sq],
            "special_vertices": list(special_vertices(diagram)),
        }
    )
    return 0


def _cmd_cocovers(args) -> int:
    weight = _weight_arg(args.type, args.labels, args.shift)
    _emit([edge_to_json(edge) for edge in cocovers(weight)])
    return 0


def _cmd_covers(args) -> int:
    weight = _weight_arg(args.type, args.labels, args.shift)
    _emit([edge_to_json(edge) for edge in covers(weight)])
    return 0


def _cmd_interval(args) -> int:
    top = _weight_arg(args.type, args.top, args.top_shift)
    bottom = _weight_arg(args.type, args.bottom, args.bottom_shift)
    graph = interval(top, bottom)
    if args.format == "dot":
        print(export_graph(graph, "dot"), end="")
    else:
        _emit(export_graph(graph, "json"))
    return 0


def _cmd_cell(args) -> int:
    lam = _weight_arg(args.type, args.labels, args.shift)
    diagram = lam.diagram
    from .roots import CoverKind

    wanted = {
        "mu": _labels_arg(args.mu, diagram),
        "mu2": _labels_arg(args.mu2, diagram),
    }
    found = {}
    available = []
    for edge in cocovers(lam):
        if edge.kind is CoverKind.DELTA:
            continue
        labs = tuple(int(v) for v in labels(edge.lower))
        available.append(labs)
        for key, target in wanted.items():
            if labs == target:
                found[key] = edge.lower
    for key, target in wanted.items():
        if key not in found:
            raise ValueError(
                f"{list(target)} is not a finite-root cocover of the top; "
                f"available: {[list(a) for a in available]}"
            )
    cell = basic_cell(lam, found["mu"], found["mu2"])
    if args.format == "dot":
        print(f"// shape={cell.shape.value} case={cell.case}")
        print(export_graph(cell.graph, "dot"), end="")
    else:
        _emit(
            {
                "shape": cell.shape.value,
                "case": cell.case,
                "graph": export_graph(cell.graph, "json"),
            }
        )
    return 0


def _cmd_verify(args) -> int:
    if args.all_types:
        names = list(catalog_types())
    elif args.type:
        names = [args.type]
    else:
        raise _UsageError("give a type or --all-types")
    levels = tuple(int(p) for p in args.levels.split(","))
    window = None
    reports = []
    for name in names:
        diagram = build_affine(parse_type_id(name))
        if args.window:
            window = SearchWindow(tuple(int(p) for p in args.window.split(",")))
        report = verify_covering(
            diagram,
            levels=levels,
            samples_per_level=args.samples,
            seed=args.seed,
            window=window,
            budget=args.budget,
        )
        if report.budget_exceeded:
            print(
                f"warning: time budget exhausted for {report.type} "
                f"after {report.tested} weights",
                file=sys.stderr,
            )
        reports.append(report)
    if args.all_types:
        _emit([r.to_json() for r in reports])
    else:
        _emit(reports[0].to_json())
    if any(r.mismatches for r in reports):
        return 3
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="affposet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("types", help="list the built-in affine types")
    p.set_defaults(func=_cmd_types)

    p = sub.add_parser("info", help="tables and special vertices of one type")
    p.add_argument("type")
    p.set_defaults(func=_cmd_info)

    for name, func in (("cocovers", _cmd_cocovers), ("covers", _cmd_covers)):
        p = sub.add_parser(name, help=f"{name} of a dominant weight")
        p.add_argument("type")
        p.add_argument("--labels", required=True)
        p.add_argument("--shift", default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("interval", help="Hasse diagram between two weights")
    p.add_argument("type")
    p.add_argument("--top", required=True)
    p.add_argument("--bottom", required=True)
    p.add_argument("--top-shift", default=None)
    p.add_argument("--bottom-shift", default=None)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_interval)

    p = sub.add_parser("cell", help="basic cell under a weight and two cocovers")
    p.add_argument("type")
    p.add_argument("--labels", required=True)
    p.add_argument("--shift", default=None)
    p.add_argument("--mu", required=True)
    p.add_argument("--mu2", required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=_cmd_cell)

    p = sub.add_parser("verify", help="brute force check of the cover theory")
    p.add_argument("type", nargs="?")
    p.add_argument("--all-types", action="store_true")
    p.add_argument("--levels", default="1,2,3")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=float, default=None)
    p.add_argument("--window", default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    """Run one command; returns the exit code instead of raising SystemExit."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        parser = _build_parser()
        try:
            args = parser.parse_args(argv)
        except _UsageError as exc:
            print(f"usage error: {exc}", file=sys.stderr)
            return 1
        except SystemExit as exc:
            code = exc.code
            return 0 if code in (0, None) else int(code)
        try:
            return args.func(args)
        except _UsageError as exc:
            print(f"usage error: {exc}", file=sys.stderr)
            return 1
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    return 0


def main() -> None:
    sys.exit(run())
