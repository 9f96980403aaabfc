"""Command-line interface.

Exit codes: 0 success / SemiTransitive / Sat, 1 usage or parse error,
2 Cyclic, 3 HasShortcut, 4 Unsat, 5 sweep found a classification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .graph_core import (
    Graph,
    ResourceLimitError,
    format_edge_list,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
    parse_comments,
    parse_edge_list,
)
from .mycielski import LabeledGraph, extended_mycielski, guess_labels, mycielski
from .orientation import (
    Cyclic,
    HasShortcut,
    check_semi_transitive,
    check_semi_transitive_reference,
    format_orientation,
    parse_orientation,
    verdict_to_json,
)
from .solver import SolveOptions, solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CYCLIC = 2
EXIT_SHORTCUT = 3
EXIT_UNSAT = 4
EXIT_MISMATCH = 5


class UsageError(Exception):
    pass


def _read_graph(path: str) -> tuple[Graph, LabeledGraph | None]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        g = parse_edge_list(text)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None
    return g, _labels_for(g, parse_comments(text))


def _labels_for(g: Graph, comments: list[str]) -> LabeledGraph | None:
    for c in comments:
        kind, _, rest = c.partition(" ")
        if kind in ("mycielski", "extended_mycielski") and rest.startswith("base_n="):
            base_n = int(rest.split("=", 1)[1])
            if g.n == 2 * base_n + 1:
                return LabeledGraph(g, base_n, extended=kind == "extended_mycielski")
    return guess_labels(g)


def _build_base(family: str, sizes: list[int]) -> Graph:
    builders = {"cycle": make_cycle, "path": make_path, "complete": make_complete}
    if family == "complete_bipartite":
        if len(sizes) != 2:
            raise UsageError("complete_bipartite takes two sizes")
        return make_complete_bipartite(*sizes)
    if family not in builders:
        raise UsageError(f"unknown family {family!r}")
    if len(sizes) != 1:
        raise UsageError(f"{family} takes one size")
    return builders[family](sizes[0])


def cmd_build(args) -> int:
    if args.family == "file":
        if len(args.size) != 1:
            raise UsageError("file family takes one path")
        base, _ = _read_graph(args.size[0])
    else:
        try:
            sizes = [int(s) for s in args.size]
        except ValueError:
            raise UsageError(f"sizes must be integers, got {args.size}") from None
        try:
            base = _build_base(args.family, sizes)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    comments = []
    if args.transform == "mycielski":
        g = mycielski(base).graph
        comments.append(f"mycielski base_n={base.n}")
    elif args.transform == "extended":
        g = extended_mycielski(base).graph
        comments.append(f"extended_mycielski base_n={base.n}")
    else:
        g = base
    text = format_edge_list(g, comments)
    if args.output:
        Path(args.output).write_text(text)
        print(f"{g.n} {g.m}")
    else:
        sys.stdout.write(text)
        print(f"{g.n} {g.m}", file=sys.stderr)
    return EXIT_OK


def _read_orientation(path: str, g: Graph):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return parse_orientation(text, g)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_check(args) -> int:
    g, _ = _read_graph(args.graph)
    o = _read_orientation(args.orientation, g)
    checker = check_semi_transitive_reference if args.reference else check_semi_transitive
    try:
        verdict = checker(o)
    except ResourceLimitError as exc:
        raise UsageError(str(exc)) from None
    print(json.dumps(verdict_to_json(verdict)))
    if isinstance(verdict, Cyclic):
        return EXIT_CYCLIC
    if isinstance(verdict, HasShortcut):
        return EXIT_SHORTCUT
    return EXIT_OK


def _vertex_arg(value: str | None, labels: LabeledGraph | None) -> int | None:
    if value is None:
        return None
    if value == "apex":
        if labels is None:
            raise UsageError("'apex' needs a Mycielski-labelled graph")
        return labels.apex
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"vertex must be an integer or 'apex', got {value!r}") from None


def cmd_solve(args) -> int:
    g, labels = _read_graph(args.graph)
    opts = SolveOptions(
        forced_source=_vertex_arg(args.source, labels),
        forced_sink=_vertex_arg(args.sink, labels),
        mode=args.mode,
    )
    try:
        result = solve(g, opts)
    except (ValueError, ResourceLimitError) as exc:
        raise UsageError(str(exc)) from None
    payload = result.to_json()
    if result.sat:
        cert_path = Path(args.certificate or f"{args.graph}.orient")
        cert_path.write_text(format_orientation(result.orientation))
        payload["certificate_file"] = str(cert_path)
    print(json.dumps(payload))
    return EXIT_OK if result.sat else EXIT_UNSAT


def cmd_sweep(args) -> int:
    from .sweep import run_sweep, sweep_instances

    max_n = args.max_n
    if max_n is None and not args.families:
        max_n = 4
    try:
        instances = sweep_instances(max_n, args.families, connected_only=not args.all_graphs)
    except (ValueError, ResourceLimitError) as exc:
        raise UsageError(str(exc)) from None
    report = run_sweep(instances, extended=args.extended, pin_apex=args.pin_apex, jobs=args.jobs)
    report.write(args.out)
    if not args.no_figure:
        from .plotting import plot_sweep

        plot_sweep(report, Path(args.out) / "sweep.png")
    print(json.dumps({"summary": report.summary, "mismatches": report.mismatches}))
    return EXIT_MISMATCH if report.mismatches else EXIT_OK


def cmd_export_dot(args) -> int:
    from .dot import to_dot

    g, labels = _read_graph(args.graph)
    o = _read_orientation(args.orientation, g) if args.orientation else None
    text = to_dot(g, o, labels)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.png:
        if labels is None:
            raise UsageError("--png drawing needs a Mycielski-labelled graph")
        from .plotting import draw_mycielski

        draw_mycielski(labels, args.png, o)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="semitrans", description="Semi-transitive orientations of Mycielski graphs."
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a graph and write it as an edge-list")
    b.add_argument("family", help="cycle | path | complete | complete_bipartite | file")
    b.add_argument("size", nargs="+", help="size(s), or a path for 'file'")
    b.add_argument("--transform", choices=["none", "mycielski", "extended"], default="none")
    b.add_argument("-o", "--output", help="edge-list file (default: stdout)")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("check", help="check an orientation for semi-transitivity")
    c.add_argument("graph")
    c.add_argument("orientation")
    c.add_argument("--reference", action="store_true", help="use the path-enumeration checker")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("solve", help="search for a semi-transitive orientation")
    s.add_argument("graph")
    s.add_argument("--source", help="vertex forced to be a source (integer or 'apex')")
    s.add_argument("--sink", help="vertex forced to be a sink (integer or 'apex')")
    s.add_argument("--mode", choices=["auto", "exhaustive", "backtracking"], default="auto")
    s.add_argument("--certificate", help="where to write the orientation (default GRAPH.orient)")
    s.set_defaults(func=cmd_solve)

    w = sub.add_parser("sweep", help="compare bipartiteness with solvability of mu(G)")
    w.add_argument("--max-n", type=int, help="enumerate labelled graphs on 1..N vertices")
    w.add_argument(
        "--families", nargs="*", default=[], metavar="NAME:LO-HI",
        help="e.g. cycle:3-9 complete:2-4 path:2-5 complete_bipartite:1-3",
    )
    w.add_argument("--extended", action="store_true", help="also solve mu'(G)")
    w.add_argument("--all-graphs", action="store_true", help="include disconnected graphs")
    w.add_argument(
        "--no-pin-apex", dest="pin_apex", action="store_false",
        help="search without forcing the apex to be a source",
    )
    w.add_argument("--jobs", type=int, default=1)
    w.add_argument("--out", default="sweep_out", help="directory for sweep.csv/json/png")
    w.add_argument("--no-figure", action="store_true")
    w.set_defaults(func=cmd_sweep)

    d = sub.add_parser("export-dot", help="render a graph (and orientation) as DOT")
    d.add_argument("graph")
    d.add_argument("orientation", nargs="?")
    d.add_argument("-o", "--output")
    d.add_argument("--png", help="also draw the layered Mycielski layout to this file")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
