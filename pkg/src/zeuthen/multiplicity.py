"""Corner-cutting recursion for the complex weight of a lattice path.

A path that is not supported on a boundary chain has, on each side, a first
vertex where that side's region is strictly convex.  Cutting the corner
there removes a lattice triangle and shortens the path by one; the side
multiplicity is the product of the lattice areas of the removed triangles,
down to a chain-supported path (weight 1).  If the cutting ever gets stuck
on a non-chain path the side contributes 0: no dual subdivision, hence no
tropical curve, completes such a path.

The full weight of a path is the product of its two side multiplicities.
Every run is recorded as a trace (pivot, triangle, factor per cut) so that
renderings and audits can replay the subdivision.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .geometry import LatticePoint, Side, is_strictly_convex, twice_area
from .paths import LatticePath, is_supported_on_chain

Triangle = tuple[LatticePoint, LatticePoint, LatticePoint]


class Terminal(Enum):
    """How a side recursion ended."""

    CHAIN_BASE = "chain"  # reached a path supported on the side's chain
    DEAD = "dead"         # no strictly convex pivot left; multiplicity 0


class CutStep(NamedTuple):
    pivot: int
    triangle: Triangle
    factor: int


@dataclass(frozen=True)
class MultiplicityTrace:
    """Transcript of one side recursion: the corner-cut subdivision."""

    side: Side
    steps: tuple[CutStep, ...]
    terminal: Terminal

    @property
    def value(self) -> int:
        if self.terminal is Terminal.DEAD:
            return 0
        result = 1
        for step in self.steps:
            result *= step.factor
        return result


def find_pivot(path: LatticePath, side: Side) -> int | None:
    """Smallest interior index where the side's region is strictly convex."""
    pts = path.points
    for k in range(1, len(pts) - 1):
        if is_strictly_convex(pts[k - 1], pts[k], pts[k + 1], side):
            return k
    return None


def cut_corner(path: LatticePath, k: int) -> LatticePath:
    """The path with its k-th point deleted; still sweep-increasing."""
    if not 1 <= k <= path.step_count - 1:
        raise ValueError(f"pivot {k} out of range for a {path.step_count}-step path")
    return LatticePath(path.points[:k] + path.points[k + 1 :], path.degree)


def side_multiplicity(path: LatticePath, side: Side) -> tuple[int, MultiplicityTrace]:
    """Multiplicity of the path on one side, with its cut transcript."""
    steps: list[CutStep] = []
    cur = path
    while not is_supported_on_chain(cur, side):
        k = find_pivot(cur, side)
        if k is None:
            return 0, MultiplicityTrace(side, tuple(steps), Terminal.DEAD)
        pts = cur.points
        triangle: Triangle = (pts[k - 1], pts[k], pts[k + 1])
        steps.append(CutStep(k, triangle, twice_area(*triangle)))
        cur = cut_corner(cur, k)
    trace = MultiplicityTrace(side, tuple(steps), Terminal.CHAIN_BASE)
    return trace.value, trace


def multiplicity(path: LatticePath) -> int:
    """Weight of the path in the complex count: product of both sides."""
    plus, _ = side_multiplicity(path, Side.PLUS)
    if plus == 0:
        return 0
    minus, _ = side_multiplicity(path, Side.MINUS)
    return plus * minus
