"""Sweep-increasing lattice paths in the Newton triangle.

A path is a strictly sweep-increasing sequence of lattice points inside the
triangle.  The counting algorithm only ever needs the unique path of maximal
length avoiding a given set of marked boundary points (tangency markers);
a general enumerator is provided as a testing oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .geometry import (
    BoundaryEdge,
    EdgeVector,
    LatticePoint,
    NewtonTriangle,
    Side,
    edge_containing_interior_point,
    lattice_points,
    sweep_key,
)


@dataclass(frozen=True)
class MarkedConfig:
    """Degree plus up to three marked interior edge points to avoid.

    Each marked point encodes a tangency condition to the line dual to its
    edge; the points must lie strictly inside pairwise distinct edges.
    """

    degree: int
    marked: tuple[tuple[BoundaryEdge, LatticePoint], ...] = ()

    def __post_init__(self) -> None:
        if self.degree < 2:
            raise ValueError(f"degree must be >= 2, got {self.degree}")
        if len(self.marked) > 3:
            raise ValueError(f"at most 3 marked points, got {len(self.marked)}")
        triangle = NewtonTriangle(self.degree)
        edges = [edge for edge, _ in self.marked]
        if len(set(edges)) != len(edges):
            raise ValueError("marked edges must be pairwise distinct")
        for edge, point in self.marked:
            if edge_containing_interior_point(triangle, point) is not edge:
                raise ValueError(
                    f"{tuple(point)} is not interior to edge {edge.code!r} "
                    f"of the degree-{self.degree} triangle"
                )

    @property
    def triangle(self) -> NewtonTriangle:
        return NewtonTriangle(self.degree)

    @property
    def marked_points(self) -> tuple[LatticePoint, ...]:
        return tuple(point for _, point in self.marked)


@dataclass(frozen=True)
class LatticePath:
    """A strictly sweep-increasing sequence of points inside the triangle."""

    points: tuple[LatticePoint, ...]
    degree: int

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("a path needs at least one point")
        triangle = NewtonTriangle(self.degree)
        for p in self.points:
            if not triangle.contains(p):
                raise ValueError(f"{tuple(p)} outside the degree-{self.degree} triangle")
        keys = [sweep_key(p) for p in self.points]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise ValueError("path points must strictly increase in sweep order")

    @property
    def step_count(self) -> int:
        return len(self.points) - 1


def build_maximal_path(cfg: MarkedConfig) -> LatticePath:
    """The unique maximal path avoiding the marked points.

    It visits every lattice point of the triangle except the marked ones, in
    sweep order; with l marked points that is d(d+3)/2 - l steps.  Uniqueness
    is forced by the length: any path with that many steps visits every
    allowed point, and the sweep order is total.
    """
    forbidden = set(cfg.marked_points)
    pts = tuple(p for p in lattice_points(cfg.triangle) if p not in forbidden)
    return LatticePath(pts, cfg.degree)


def step_vectors(path: LatticePath) -> list[EdgeVector]:
    """Consecutive displacements of the path, one per step."""
    pts = path.points
    return [pts[j + 1] - pts[j] for j in range(len(pts) - 1)]


def _segment_on_chain(a: LatticePoint, b: LatticePoint, degree: int, side: Side) -> bool:
    if side is Side.PLUS:
        return a.x + a.y == degree and b.x + b.y == degree
    # Minus chain is the vertical edge followed by the bottom edge; a segment
    # lies on it iff both ends are on the same one of the two edges.
    return (a.x == 0 and b.x == 0) or (a.y == 0 and b.y == 0)


def is_supported_on_chain(path: LatticePath, side: Side) -> bool:
    """Whether every segment of the path lies on the side's boundary chain.

    PLUS chain: the hypotenuse.  MINUS chain: vertical edge then bottom edge.
    The path may skip lattice points of the chain (a marked point forces a
    segment of lattice length 2); only the image matters.  This is the base
    case of both multiplicity recursions.
    """
    pts = path.points
    return all(
        _segment_on_chain(pts[j], pts[j + 1], path.degree, side)
        for j in range(len(pts) - 1)
    )


def enumerate_paths(
    triangle: NewtonTriangle,
    n: int,
    forbidden: list[LatticePoint] | tuple[LatticePoint, ...] = (),
) -> Iterator[LatticePath]:
    """All sweep-increasing n-step paths from (0,d) to (d,0) avoiding points.

    Every set of lattice points containing the two extremes is a valid path
    once sorted (the triangle is convex and the sweep order total), so the
    enumeration is simply over combinations of interior visit points, in
    lexicographic order on the visited sequences.  Intended as a testing
    oracle; the counting code only uses paths of maximal length.
    """
    if n < 1:
        raise ValueError(f"a path needs at least one step, got n={n}")
    avoid = set(forbidden)
    p, q = triangle.sweep_min, triangle.sweep_max
    if p in avoid or q in avoid:
        return
    middles = [pt for pt in lattice_points(triangle)[1:-1] if pt not in avoid]
    for combo in combinations(middles, n - 1):
        yield LatticePath((p,) + combo + (q,), triangle.degree)
