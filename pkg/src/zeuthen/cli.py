"""Command-line front end: count, render, verify.

JSON goes to standard output, diagnostics to standard error.  Exit codes:
0 success, 1 internal inconsistency, 2 argument errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .counting import complex_count, known_value, maximality_report, real_count
from .geometry import BoundaryEdge, LatticePoint, NewtonTriangle, edge_containing_interior_point
from .paths import MarkedConfig
from .render import RenderSpec, render
from .signs import (
    PhaseDispatchError,
    SignSequence,
    format_sign_sequence,
    one_line_sign_sequence,
    parse_sign_sequence,
    two_line_sign_sequence,
)

JSON_SCHEMA = "tz/1"


def _parse_edges(text: str) -> tuple[BoundaryEdge, ...]:
    return tuple(BoundaryEdge.from_code(tok.strip()) for tok in text.split(",") if tok.strip())


def _resolve_signs(
    name: str, degree: int, edges: tuple[BoundaryEdge, ...]
) -> SignSequence | None:
    if name == "none":
        return None
    if name == "ronga":
        if len(edges) != 1:
            raise ValueError("--signs ronga applies to a single tangency edge")
        return one_line_sign_sequence(degree, edges[0])
    if name == "theorem":
        if len(edges) != 2:
            raise ValueError("--signs theorem applies to exactly two tangency edges")
        return two_line_sign_sequence(degree)
    return parse_sign_sequence(name)


def _parse_marked(text: str, degree: int) -> MarkedConfig:
    triangle = NewtonTriangle(degree)
    marks = []
    for token in text.split(";"):
        token = token.strip()
        if not token:
            continue
        coords = token.split(",")
        if len(coords) != 2:
            raise ValueError(f"bad marked point {token!r}: expected x,y")
        try:
            point = LatticePoint(int(coords[0]), int(coords[1]))
        except ValueError:
            raise ValueError(f"bad marked point {token!r}: expected integers") from None
        edge = edge_containing_interior_point(triangle, point)
        if edge is None:
            raise ValueError(
                f"{tuple(point)} is not interior to an edge of the degree-{degree} triangle"
            )
        marks.append((edge, point))
    return MarkedConfig(degree, tuple(marks))


def cmd_count(args: argparse.Namespace) -> int:
    edges = _parse_edges(args.edges)
    signs = _resolve_signs(args.signs, args.degree, edges)
    if signs is None:
        report = complex_count(args.degree, edges)
    else:
        report = real_count(args.degree, edges, signs)
    reference = known_value(args.degree, len(edges))

    doc: dict = {
        "schema": JSON_SCHEMA,
        "degree": report.degree,
        "edges": [e.code for e in report.edges],
        "total_complex": report.total_complex,
    }
    if report.total_real is not None:
        doc["total_real"] = report.total_real
        doc["sign_sequence"] = format_sign_sequence(report.signs or ())
    doc["known_total"] = reference
    doc["unverified"] = reference is None
    if args.per_path:
        doc["selections"] = [
            {
                "marked": [[p.x, p.y] for p in sel.marked],
                "mu": sel.multiplicity,
                **(
                    {"mu_real": sel.real_multiplicity}
                    if sel.real_multiplicity is not None
                    else {}
                ),
            }
            for sel in report.selections
        ]
    print(json.dumps(doc, indent=2))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    cfg = _parse_marked(args.marked, args.degree)
    spec = RenderSpec(
        format=args.format,
        show_path=not args.no_path,
        show_marked=not args.no_marked,
        show_subdivision=not args.no_subdivision,
        show_labels=not args.no_labels,
        scale=args.render_scale,
    )
    picture = render(cfg, spec)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(picture)
    else:
        sys.stdout.write(picture)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    print(
        "degree,complex_one_line,expected_one_line,"
        "complex_two_line,expected_two_line,real_two_line,maximal"
    )
    first_failure: str | None = None
    for d in range(2, args.max_degree + 1):
        one = complex_count(d, (BoundaryEdge.HYPOTENUSE,)).total_complex
        expected_one = known_value(d, 1)
        report = maximality_report(d)
        two = report.report.total_complex
        expected_two = known_value(d, 2)
        real_two = report.report.total_real
        maximal = report.is_maximal and report.all_selections_real
        row = (
            f"{d},{one},{expected_one},{two},{expected_two},{real_two},"
            f"{'yes' if maximal else 'no'}"
        )
        print(row)
        ok = one == expected_one and two == expected_two and real_two == expected_two and maximal
        if not ok and first_failure is None:
            first_failure = row
    if first_failure is not None:
        print(f"verification failed, first bad row: {first_failure}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeuthen",
        description="Count plane curves tangent to lines via tropical lattice paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count curves for a degree and tangency edges")
    count.add_argument("--degree", type=int, required=True)
    count.add_argument(
        "--edges",
        required=True,
        help="comma-separated edge codes among h (hypotenuse), v (vertical), b (bottom)",
    )
    count.add_argument(
        "--signs",
        default="none",
        help="'ronga', 'theorem', 'none', or a literal sequence like '-+,++,++'",
    )
    count.add_argument(
        "--per-path", action="store_true", help="include the per-selection breakdown"
    )
    count.set_defaults(func=cmd_count)

    rend = sub.add_parser("render", help="draw the triangle, path and corner cuts")
    rend.add_argument("--degree", type=int, required=True)
    rend.add_argument(
        "--marked",
        default="",
        help="semicolon-separated marked points, e.g. '1,1' or '2,2;0,2'",
    )
    rend.add_argument("--format", choices=("svg", "ascii"), default="svg")
    rend.add_argument("--out", help="output file (default: standard output)")
    rend.add_argument(
        "--scale", dest="render_scale", type=int, default=40, help="pixels per lattice unit"
    )
    rend.add_argument("--no-path", action="store_true")
    rend.add_argument("--no-marked", action="store_true")
    rend.add_argument("--no-subdivision", action="store_true")
    rend.add_argument("--no-labels", action="store_true")
    rend.set_defaults(func=cmd_render)

    verify = sub.add_parser("verify", help="check the counts against the closed forms")
    verify.add_argument("--max-degree", type=int, default=8)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PhaseDispatchError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())
