"""Static pictures of a marked triangle, its maximal path and its cuts.

Two targets: standalone SVG and plain-text ASCII.  Both draw the Newton
triangle, the marked (avoided) boundary points, the maximal path, and the
triangles removed by the two corner-cutting runs, giving the subdivision
dual to the counted tropical curve.  Output is a pure function of the
input: no timestamps, stable ordering, byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import LatticePoint, Side, lattice_points
from .multiplicity import MultiplicityTrace, side_multiplicity
from .paths import LatticePath, MarkedConfig, build_maximal_path

_SIDE_FILL = {Side.PLUS: "#dce8f7", Side.MINUS: "#f7e8dc"}


@dataclass(frozen=True)
class RenderSpec:
    """What to draw and how large."""

    format: str = "svg"  # "svg" or "ascii"
    show_path: bool = True
    show_marked: bool = True
    show_subdivision: bool = True
    show_labels: bool = True
    scale: int = 40  # pixels per lattice unit, svg only

    def __post_init__(self) -> None:
        if self.format not in ("svg", "ascii"):
            raise ValueError(f"unknown render format {self.format!r}")
        if self.scale < 1:
            raise ValueError(f"scale must be positive, got {self.scale}")


def render(cfg: MarkedConfig, spec: RenderSpec = RenderSpec()) -> str:
    path = build_maximal_path(cfg)
    traces = (
        side_multiplicity(path, Side.PLUS)[1],
        side_multiplicity(path, Side.MINUS)[1],
    )
    if spec.format == "ascii":
        return _render_ascii(cfg, path, traces, spec)
    return _render_svg(cfg, path, traces, spec)


# --- ascii ---------------------------------------------------------------


def _render_ascii(
    cfg: MarkedConfig,
    path: LatticePath,
    traces: tuple[MultiplicityTrace, MultiplicityTrace],
    spec: RenderSpec,
) -> str:
    d = cfg.degree
    # lattice point (x, y) sits at row 2*(d - y), column 2*x
    grid = [[" "] * (2 * d + 1) for _ in range(2 * d + 1)]
    for p in lattice_points(cfg.triangle):
        grid[2 * (d - p.y)][2 * p.x] = "."

    if spec.show_path:
        pts = path.points
        for a, b in zip(pts, pts[1:]):
            _ascii_segment(grid, d, a, b)
        for p in pts:
            grid[2 * (d - p.y)][2 * p.x] = "o"
    if spec.show_marked:
        for p in cfg.marked_points:
            grid[2 * (d - p.y)][2 * p.x] = "x"

    lines = ["".join(row).rstrip() for row in grid]
    if spec.show_labels:
        lines.append("")
        lines.append("path: " + " ".join(f"({p.x},{p.y})" for p in path.points))
        if cfg.marked_points:
            lines.append(
                "marked: " + " ".join(f"({p.x},{p.y})" for p in cfg.marked_points)
            )
        total = 1
        for trace in traces:
            label = "+" if trace.side is Side.PLUS else "-"
            if trace.steps:
                factors = " ".join(str(s.factor) for s in trace.steps)
            else:
                factors = "(chain)"
            lines.append(f"side {label} cuts: {factors} -> {trace.value}")
            total *= trace.value
        lines.append(f"weight: {total}")
    return "\n".join(lines) + "\n"


def _ascii_segment(grid: list[list[str]], d: int, a: LatticePoint, b: LatticePoint) -> None:
    """Draw -, | or a diagonal between two path points; other slopes are
    left as bare vertices."""
    row_a, col_a = 2 * (d - a.y), 2 * a.x
    row_b, col_b = 2 * (d - b.y), 2 * b.x
    if row_a == row_b:
        for col in range(min(col_a, col_b) + 1, max(col_a, col_b)):
            grid[row_a][col] = "-"
    elif col_a == col_b:
        for row in range(min(row_a, row_b) + 1, max(row_a, row_b)):
            grid[row][col_a] = "|"
    elif abs(b.x - a.x) == abs(b.y - a.y):
        step = 1 if row_b > row_a else -1
        char = "\\" if step > 0 else "/"
        row, col = row_a + step, col_a + 1
        while col < col_b:
            grid[row][col] = char
            row += step
            col += 1


# --- svg -----------------------------------------------------------------


def _fmt(value: float) -> str:
    if value == int(value):
        return str(int(value))
    return f"{value:.2f}".rstrip("0").rstrip(".")


def _render_svg(
    cfg: MarkedConfig,
    path: LatticePath,
    traces: tuple[MultiplicityTrace, MultiplicityTrace],
    spec: RenderSpec,
) -> str:
    d, s = cfg.degree, spec.scale
    margin = s
    size = 2 * margin + d * s

    def sx(x: float) -> float:
        return margin + x * s

    def sy(y: float) -> float:
        return margin + (d - y) * s  # svg y grows downward

    def xy(p: LatticePoint) -> str:
        return f"{_fmt(sx(p.x))},{_fmt(sy(p.y))}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">'
    ]

    if spec.show_subdivision:
        for trace in traces:
            fill = _SIDE_FILL[trace.side]
            for step in trace.steps:
                pts = " ".join(xy(p) for p in step.triangle)
                parts.append(
                    f'<polygon points="{pts}" fill="{fill}" '
                    f'stroke="#b0b0b0" stroke-width="1"/>'
                )

    corners = (LatticePoint(0, 0), LatticePoint(d, 0), LatticePoint(0, d))
    parts.append(
        f'<polygon points="{" ".join(xy(p) for p in corners)}" '
        f'fill="none" stroke="#000000" stroke-width="2"/>'
    )

    for p in lattice_points(cfg.triangle):
        parts.append(
            f'<circle cx="{_fmt(sx(p.x))}" cy="{_fmt(sy(p.y))}" r="2" fill="#808080"/>'
        )

    if spec.show_labels:
        for trace in traces:
            for step in trace.steps:
                cx = sx(sum(p.x for p in step.triangle) / 3)
                cy = sy(sum(p.y for p in step.triangle) / 3)
                parts.append(
                    f'<text x="{_fmt(cx)}" y="{_fmt(cy)}" font-size="{s // 3}" '
                    f'text-anchor="middle" dominant-baseline="middle" '
                    f'fill="#404040">{step.factor}</text>'
                )

    if spec.show_path:
        polyline = " ".join(xy(p) for p in path.points)
        parts.append(
            f'<polyline points="{polyline}" fill="none" '
            f'stroke="#1a5fb4" stroke-width="3"/>'
        )
        for p in path.points:
            parts.append(
                f'<circle cx="{_fmt(sx(p.x))}" cy="{_fmt(sy(p.y))}" r="4" fill="#1a5fb4"/>'
            )

    if spec.show_marked:
        arm = s / 5
        for p in cfg.marked_points:
            cx, cy = sx(p.x), sy(p.y)
            parts.append(
                f'<path d="M {_fmt(cx - arm)} {_fmt(cy - arm)} L {_fmt(cx + arm)} '
                f'{_fmt(cy + arm)} M {_fmt(cx - arm)} {_fmt(cy + arm)} L '
                f'{_fmt(cx + arm)} {_fmt(cy - arm)}" '
                f'stroke="#c01c28" stroke-width="3" fill="none"/>'
            )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
