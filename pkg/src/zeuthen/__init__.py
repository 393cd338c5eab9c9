"""Counting plane curves tangent to lines via tropical lattice paths.

Exact integer combinatorics only: paths in the degree-d Newton triangle,
weighted by a corner-cutting recursion, count the complex curves through
points and tangent to up to three lines; signed paths count the real ones,
and the shipped sign sequences realize configurations where every complex
solution is real.
"""

from .counting import (
    CountReport,
    MaximalityReport,
    SearchResult,
    SearchStrategy,
    SelectionCount,
    complex_count,
    known_value,
    maximality_report,
    real_count,
    sequence_length,
    sign_search,
)
from .geometry import (
    BoundaryEdge,
    EdgeVector,
    LatticePoint,
    NewtonTriangle,
    Side,
    edge_containing_interior_point,
    interior_edge_points,
    is_strictly_convex,
    lambda_less,
    lattice_length,
    lattice_points,
    sweep_key,
    twice_area,
)
from .multiplicity import (
    CutStep,
    MultiplicityTrace,
    Terminal,
    cut_corner,
    find_pivot,
    multiplicity,
    side_multiplicity,
)
from .paths import (
    LatticePath,
    MarkedConfig,
    build_maximal_path,
    enumerate_paths,
    is_supported_on_chain,
    step_vectors,
)
from .render import RenderSpec, render
from .signs import (
    ALL_SIGNS,
    CaseKind,
    CaseOutcome,
    MINUS_MINUS,
    MINUS_PLUS,
    PLUS_MINUS,
    PLUS_PLUS,
    PhaseClass,
    PhaseCoupling,
    PhaseDispatchError,
    PhasedPath,
    Sign,
    SignSequence,
    attach_phases,
    classify_triangle,
    format_sign_sequence,
    one_line_sign_sequence,
    parse_sign_sequence,
    phase_of,
    real_multiplicity,
    real_side_multiplicity,
    two_line_sign_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_SIGNS",
    "BoundaryEdge",
    "CaseKind",
    "CaseOutcome",
    "CountReport",
    "CutStep",
    "EdgeVector",
    "LatticePath",
    "LatticePoint",
    "MarkedConfig",
    "MaximalityReport",
    "MINUS_MINUS",
    "MINUS_PLUS",
    "MultiplicityTrace",
    "NewtonTriangle",
    "PLUS_MINUS",
    "PLUS_PLUS",
    "PhaseClass",
    "PhaseCoupling",
    "PhaseDispatchError",
    "PhasedPath",
    "RenderSpec",
    "SearchResult",
    "SearchStrategy",
    "SelectionCount",
    "Side",
    "Sign",
    "SignSequence",
    "Terminal",
    "attach_phases",
    "build_maximal_path",
    "classify_triangle",
    "complex_count",
    "cut_corner",
    "edge_containing_interior_point",
    "enumerate_paths",
    "find_pivot",
    "format_sign_sequence",
    "interior_edge_points",
    "is_strictly_convex",
    "is_supported_on_chain",
    "known_value",
    "lambda_less",
    "lattice_length",
    "lattice_points",
    "maximality_report",
    "multiplicity",
    "one_line_sign_sequence",
    "parse_sign_sequence",
    "phase_of",
    "real_count",
    "real_multiplicity",
    "real_side_multiplicity",
    "render",
    "sequence_length",
    "side_multiplicity",
    "sign_search",
    "step_vectors",
    "sweep_key",
    "twice_area",
    "two_line_sign_sequence",
]
