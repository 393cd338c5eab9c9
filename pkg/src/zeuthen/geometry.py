"""Exact lattice geometry of the degree-d Newton triangle.

Everything here is integer arithmetic: points, displacement vectors, areas
(twice the Euclidean area of a lattice triangle is an integer), lattice
lengths (gcd of coordinates) and the sweep order used to build paths.  The
sweep order comes from projecting onto a line of very small negative slope;
for points of the triangle any slope below 1/(2*degree) induces the same
total order, so it is realized exactly as "x ascending, then y descending"
with no real arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import NamedTuple


class LatticePoint(NamedTuple):
    """A point of the integer lattice Z^2."""

    x: int
    y: int

    def __sub__(self, other: "LatticePoint") -> "EdgeVector":
        return EdgeVector(self.x - other.x, self.y - other.y)


class EdgeVector(NamedTuple):
    """An integer displacement between lattice points."""

    dx: int
    dy: int


class Side(Enum):
    """The two closed regions a path cuts the triangle into.

    With paths directed from the sweep minimum (0, d) to the sweep maximum
    (d, 0), PLUS is the region on the left of the path (it contains the
    hypotenuse) and MINUS the region on the right (vertical plus bottom
    edge).
    """

    PLUS = "+"
    MINUS = "-"


class BoundaryEdge(Enum):
    """One of the three edges of the Newton triangle."""

    HYPOTENUSE = "h"  # (d, 0) -- (0, d)
    VERTICAL = "v"    # (0, 0) -- (0, d)
    BOTTOM = "b"      # (0, 0) -- (d, 0)

    @property
    def code(self) -> str:
        return self.value

    @classmethod
    def from_code(cls, code: str) -> "BoundaryEdge":
        try:
            return cls(code)
        except ValueError:
            raise ValueError(
                f"unknown edge code {code!r}: expected one of h, v, b"
            ) from None


@dataclass(frozen=True)
class NewtonTriangle:
    """The triangle with vertices (0,0), (d,0), (0,d) for degree d >= 1."""

    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")

    @property
    def sweep_min(self) -> LatticePoint:
        """First lattice point of the triangle in sweep order."""
        return LatticePoint(0, self.degree)

    @property
    def sweep_max(self) -> LatticePoint:
        """Last lattice point of the triangle in sweep order."""
        return LatticePoint(self.degree, 0)

    @property
    def point_count(self) -> int:
        return (self.degree + 1) * (self.degree + 2) // 2

    def contains(self, p: LatticePoint) -> bool:
        return p.x >= 0 and p.y >= 0 and p.x + p.y <= self.degree

    def edge_endpoints(self, edge: BoundaryEdge) -> tuple[LatticePoint, LatticePoint]:
        d = self.degree
        if edge is BoundaryEdge.HYPOTENUSE:
            return LatticePoint(d, 0), LatticePoint(0, d)
        if edge is BoundaryEdge.VERTICAL:
            return LatticePoint(0, 0), LatticePoint(0, d)
        return LatticePoint(0, 0), LatticePoint(d, 0)


def sweep_key(p: LatticePoint) -> tuple[int, int]:
    """Sort key realizing the negative-slope projection order exactly."""
    return (p.x, -p.y)


def lambda_less(a: LatticePoint, b: LatticePoint) -> bool:
    """Whether a strictly precedes b in the sweep order.

    a precedes b iff a.x < b.x, or a.x == b.x and a.y > b.y.  This is a
    strict total order on Z^2 whose minimum over the triangle is (0, d) and
    whose maximum is (d, 0).
    """
    return sweep_key(a) < sweep_key(b)


def lattice_points(triangle: NewtonTriangle) -> list[LatticePoint]:
    """All integer points of the triangle, sorted by the sweep order."""
    d = triangle.degree
    pts = [
        LatticePoint(x, y)
        for x in range(d + 1)
        for y in range(d + 1 - x)
    ]
    pts.sort(key=sweep_key)
    return pts


def interior_edge_points(
    triangle: NewtonTriangle, edge: BoundaryEdge
) -> list[LatticePoint]:
    """The d-1 lattice points strictly inside an edge, in sweep order."""
    d = triangle.degree
    if edge is BoundaryEdge.HYPOTENUSE:
        return [LatticePoint(m, d - m) for m in range(1, d)]
    if edge is BoundaryEdge.VERTICAL:
        return [LatticePoint(0, y) for y in range(d - 1, 0, -1)]
    return [LatticePoint(m, 0) for m in range(1, d)]


def edge_containing_interior_point(
    triangle: NewtonTriangle, p: LatticePoint
) -> BoundaryEdge | None:
    """The edge having p in its relative interior, if any."""
    d = triangle.degree
    if p.x == 0 and 0 < p.y < d:
        return BoundaryEdge.VERTICAL
    if p.y == 0 and 0 < p.x < d:
        return BoundaryEdge.BOTTOM
    if p.x + p.y == d and 0 < p.x < d:
        return BoundaryEdge.HYPOTENUSE
    return None


def cross(u: EdgeVector, v: EdgeVector) -> int:
    return u.dx * v.dy - u.dy * v.dx


def twice_area(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> int:
    """Lattice area of a triangle: twice the Euclidean one, always an integer.

    Zero exactly when the three points are collinear.
    """
    return abs(cross(b - a, c - a))


def lattice_length(v: EdgeVector) -> int:
    """Number of lattice points on the segment v minus one: gcd(|dx|, |dy|)."""
    if v.dx == 0 and v.dy == 0:
        raise ValueError("lattice length of the zero vector is undefined")
    return gcd(abs(v.dx), abs(v.dy))


def is_strictly_convex(
    prev: LatticePoint, cur: LatticePoint, nxt: LatticePoint, side: Side
) -> bool:
    """Whether the region on the given side has an interior angle < pi at cur.

    For a path directed from (0, d) to (d, 0) the PLUS region lies on the
    left, so a left turn (positive cross product) makes PLUS strictly convex
    at the middle vertex, and a right turn makes MINUS strictly convex.
    Collinear triples are convex for neither side.
    """
    turn = cross(cur - prev, nxt - cur)
    if side is Side.PLUS:
        return turn > 0
    return turn < 0
