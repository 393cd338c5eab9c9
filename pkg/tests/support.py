"""Shared helpers for the test suite."""

import itertools

from zeuthen.geometry import BoundaryEdge, LatticePoint, NewtonTriangle, interior_edge_points
from zeuthen.paths import LatticePath, MarkedConfig


def path_of(*pts, degree):
    return LatticePath(tuple(LatticePoint(*p) for p in pts), degree)


def all_marked_configs(degree, max_lines=3, min_lines=1):
    """Every valid selection of marked points for every edge subset."""
    triangle = NewtonTriangle(degree)
    for count in range(min_lines, max_lines + 1):
        for edges in itertools.combinations(list(BoundaryEdge), count):
            pools = [interior_edge_points(triangle, e) for e in edges]
            for chosen in itertools.product(*pools):
                yield MarkedConfig(degree, tuple(zip(edges, chosen)))
