"""Top-level counts: sum path weights over all marked-point selections.

The number of degree-d curves through d(d+3)/2 - l generic points and
tangent to l generic lines equals the total weight of the maximal paths
avoiding one interior point on each of l chosen edges, summed over all
choices of those points.  The real count replaces the weight by the signed
one for a given sign sequence; it never exceeds the complex count, and the
two-line sequence attains it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import product

from .geometry import BoundaryEdge, LatticePoint, NewtonTriangle, interior_edge_points
from .multiplicity import multiplicity
from .paths import MarkedConfig, build_maximal_path
from .signs import (
    ALL_SIGNS,
    Sign,
    SignSequence,
    real_multiplicity,
    two_line_sign_sequence,
)


@dataclass(frozen=True)
class SelectionCount:
    """One selection of marked points with its weight(s)."""

    marked: tuple[LatticePoint, ...]
    multiplicity: int
    real_multiplicity: int | None = None


@dataclass(frozen=True)
class CountReport:
    degree: int
    edges: tuple[BoundaryEdge, ...]
    selections: tuple[SelectionCount, ...]
    total_complex: int
    total_real: int | None = None
    signs: SignSequence | None = None


def _check_edges(degree: int, edges: tuple[BoundaryEdge, ...]) -> None:
    if degree < 2:
        raise ValueError(f"degree must be >= 2, got {degree}")
    if len(edges) > 3:
        raise ValueError(f"at most 3 tangency edges, got {len(edges)}")
    if len(set(edges)) != len(edges):
        raise ValueError("tangency edges must be pairwise distinct")


def _selections(degree: int, edges: tuple[BoundaryEdge, ...]):
    triangle = NewtonTriangle(degree)
    return product(*(interior_edge_points(triangle, e) for e in edges))


def sequence_length(degree: int, num_edges: int) -> int:
    """Step count of the maximal paths: d(d+3)/2 - l."""
    return degree * (degree + 3) // 2 - num_edges


def complex_count(degree: int, edges: list[BoundaryEdge] | tuple[BoundaryEdge, ...]) -> CountReport:
    """Sum the weights of the maximal paths over all marked selections."""
    edges = tuple(edges)
    _check_edges(degree, edges)
    selections = []
    for chosen in _selections(degree, edges):
        path = build_maximal_path(MarkedConfig(degree, tuple(zip(edges, chosen))))
        selections.append(SelectionCount(tuple(chosen), multiplicity(path)))
    total = sum(s.multiplicity for s in selections)
    return CountReport(degree, edges, tuple(selections), total)


def real_count(
    degree: int,
    edges: list[BoundaryEdge] | tuple[BoundaryEdge, ...],
    signs: SignSequence,
) -> CountReport:
    """Sum both the plain and the signed weights for a fixed sign sequence."""
    edges = tuple(edges)
    _check_edges(degree, edges)
    expected = sequence_length(degree, len(edges))
    if len(signs) != expected:
        raise ValueError(
            f"sign sequence has length {len(signs)}, paths have {expected} steps"
        )
    selections = []
    total_complex = 0
    total_real = 0
    for chosen in _selections(degree, edges):
        path = build_maximal_path(MarkedConfig(degree, tuple(zip(edges, chosen))))
        weight = multiplicity(path)
        real_weight = real_multiplicity(path, signs)
        selections.append(SelectionCount(tuple(chosen), weight, real_weight))
        total_complex += weight
        total_real += real_weight
    return CountReport(
        degree, edges, tuple(selections), total_complex, total_real, tuple(signs)
    )


def known_value(degree: int, num_lines: int) -> int | None:
    """Closed-form reference count, where one is known.

    No tangency: one curve through d(d+3)/2 points.  One line: 2(d-1).
    Two lines: (2(d-1))^2.  Three lines: no closed form here; counts are
    reported unverified.
    """
    if degree < 2:
        raise ValueError(f"degree must be >= 2, got {degree}")
    if num_lines == 0:
        return 1
    if num_lines == 1:
        return 2 * (degree - 1)
    if num_lines == 2:
        return 4 * (degree - 1) ** 2
    return None


@dataclass(frozen=True)
class MaximalityReport:
    """Two-line count with the sequence that should make it fully real."""

    degree: int
    report: CountReport

    @property
    def is_maximal(self) -> bool:
        return self.report.total_real == self.report.total_complex

    @property
    def all_selections_real(self) -> bool:
        return all(
            s.real_multiplicity == s.multiplicity for s in self.report.selections
        )


def maximality_report(degree: int) -> MaximalityReport:
    """Check that the two-line real count attains the complex one.

    Every selection should come out with weight 4 on both sides of the
    comparison, totalling (2(d-1))^2.
    """
    report = real_count(
        degree,
        (BoundaryEdge.HYPOTENUSE, BoundaryEdge.VERTICAL),
        two_line_sign_sequence(degree),
    )
    return MaximalityReport(degree, report)


class SearchStrategy(Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM_RESTART = "random-restart"


@dataclass(frozen=True)
class SearchResult:
    signs: SignSequence
    total: int
    evaluations: int


def _real_total(degree: int, edges: tuple[BoundaryEdge, ...], signs: SignSequence) -> int:
    total = 0
    for chosen in _selections(degree, edges):
        path = build_maximal_path(MarkedConfig(degree, tuple(zip(edges, chosen))))
        total += real_multiplicity(path, signs)
    return total


def sign_search(
    degree: int,
    edges: list[BoundaryEdge] | tuple[BoundaryEdge, ...],
    strategy: SearchStrategy,
    budget: int,
    seed: int = 0,
) -> SearchResult:
    """Maximize the real count over sign sequences within an evaluation budget.

    EXHAUSTIVE tries all 4^n sequences (rejected if that exceeds the
    budget).  RANDOM_RESTART runs steepest-ascent hill climbing from random
    sequences, the neighborhood being all single Z2-coordinate flips, and
    restarts until the budget is spent.  Deterministic for a fixed seed.
    """
    edges = tuple(edges)
    _check_edges(degree, edges)
    n = sequence_length(degree, len(edges))

    if strategy is SearchStrategy.EXHAUSTIVE:
        if 4**n > budget:
            raise ValueError(
                f"exhaustive search needs 4^{n} = {4**n} evaluations, budget is {budget}"
            )
        best_signs: SignSequence | None = None
        best = -1
        evaluations = 0
        for signs in product(ALL_SIGNS, repeat=n):
            total = _real_total(degree, edges, signs)
            evaluations += 1
            if total > best:
                best_signs, best = signs, total
        assert best_signs is not None
        return SearchResult(best_signs, best, evaluations)

    rng = random.Random(seed)
    evaluations = 0
    best_signs = None
    best = -1
    while evaluations < budget:
        current = tuple(rng.choice(ALL_SIGNS) for _ in range(n))
        value = _real_total(degree, edges, current)
        evaluations += 1
        climbing = True
        while climbing and evaluations < budget:
            climbing = False
            for j in range(n):
                for flip in (Sign(1, 0), Sign(0, 1)):
                    candidate = current[:j] + (current[j] + flip,) + current[j + 1 :]
                    total = _real_total(degree, edges, candidate)
                    evaluations += 1
                    if total > value:
                        current, value = candidate, total
                        climbing = True
                    if evaluations >= budget:
                        break
                if evaluations >= budget:
                    break
        if value > best:
            best_signs, best = current, value
    assert best_signs is not None
    return SearchResult(best_signs, best, evaluations)
