"""Signed lattice paths: sign sequences, phases, and the real multiplicity.

A sign is an element of Z2 x Z2, one per path step.  A step does not retain
the full sign: the edge of the tropical curve dual to a step is the step
rotated a quarter turn, and the curve only sees the sign up to adding the
mod-2 direction of that dual edge.  The surviving datum is the *phase*: the
class of the sign in the quotient of Z2^2 by that direction (a singleton
when the step is even in both coordinates, a pair otherwise).  Mod 2 the
quarter-turn is the coordinate swap, so the quotient direction of a step
(dx, dy) is (dy, dx) mod 2.  The swap is load-bearing: quotienting by the
step's own direction reproduces only the symmetric all-plus totals, not the
vertical-axis ones (see PhaseCoupling and the test suite).

The real multiplicity runs the same corner-cutting recursion as the complex
one, but each cut triangle T contributes a factor a(T) in {0, 1, 2, 4}
decided by the parities of its sides and by the phases of the two path
edges being merged, and the merged chord edge gets a new phase (in one case
two candidate phases, and the recursion branches and sums).  See
classify_triangle for the full case table.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .geometry import BoundaryEdge, EdgeVector, Side, twice_area
from .multiplicity import Triangle, cut_corner, find_pivot
from .paths import LatticePath, is_supported_on_chain, step_vectors


class PhaseDispatchError(RuntimeError):
    """A forced phase failed to exist or to be unique.

    The parity taxonomy of pivot triangles makes the case dispatch total and
    the forced phases unique; this firing on a valid phased path means the
    invariants have been violated upstream (or a hand-built phase does not
    match its step).
    """


class Sign(NamedTuple):
    """Element of Z2 x Z2.  Zero renders as '+', one as '-'."""

    a: int
    b: int

    def __add__(self, other: "Sign") -> "Sign":  # type: ignore[override]
        return Sign((self.a + other.a) % 2, (self.b + other.b) % 2)

    @property
    def index(self) -> int:
        """Position in the fixed enumeration of Z2^2, used for masks."""
        return (self.a << 1) | self.b

    def __str__(self) -> str:
        return "+-"[self.a] + "+-"[self.b]


PLUS_PLUS = Sign(0, 0)
PLUS_MINUS = Sign(0, 1)
MINUS_PLUS = Sign(1, 0)
MINUS_MINUS = Sign(1, 1)

ALL_SIGNS = (PLUS_PLUS, PLUS_MINUS, MINUS_PLUS, MINUS_MINUS)

SignSequence = tuple[Sign, ...]


def parse_sign_sequence(text: str) -> SignSequence:
    """Parse comma-separated two-character sign tokens, e.g. "-+,++,++"."""
    signs = []
    for token in text.split(","):
        token = token.strip().replace("−", "-")
        if len(token) != 2 or any(ch not in "+-" for ch in token):
            raise ValueError(f"bad sign token {token!r}: expected two of '+'/'-'")
        signs.append(Sign("+-".index(token[0]), "+-".index(token[1])))
    return tuple(signs)


def format_sign_sequence(signs: SignSequence) -> str:
    return ",".join(str(s) for s in signs)


class PhaseCoupling(Enum):
    """How a step's displacement determines its phase quotient direction.

    DUAL quotients by the mod-2 direction of the dual curve edge, the
    quarter-turn of the step: (dx, dy) -> (dy, dx) mod 2.  This is the
    coupling under which the one-line and two-line counts come out right,
    and the default everywhere.

    DIRECT quotients by the step's own direction (dx, dy) mod 2.  Kept for
    diagnostics: the two couplings are exchanged by swapping the two
    coordinates of every sign, so symmetric sign sequences (all-plus) give
    identical totals, but asymmetric ones do not.
    """

    DUAL = "dual"
    DIRECT = "direct"


def quotient_direction(
    step: EdgeVector, coupling: PhaseCoupling = PhaseCoupling.DUAL
) -> tuple[int, int]:
    if coupling is PhaseCoupling.DUAL:
        return (step.dy % 2, step.dx % 2)
    return (step.dx % 2, step.dy % 2)


@dataclass(frozen=True)
class PhaseClass:
    """A class of the quotient of Z2^2 by a mod-2 direction.

    Stored as a 4-bit mask over the fixed enumeration of Z2^2 (bit Sign.index
    per member).  The class of a sign s is {s} when the direction is (0, 0)
    and {s, s + direction} otherwise.
    """

    mask: int
    direction: tuple[int, int]

    def __post_init__(self) -> None:
        if not 0 < self.mask < 16:
            raise ValueError(f"mask {self.mask:#x} out of range")
        expected = 1 if self.direction == (0, 0) else 2
        shift = Sign(*self.direction)
        closed = all(self.mask & (1 << (s + shift).index) for s in self.members)
        if self.size != expected or not closed:
            raise ValueError(
                f"mask {self.mask:#x} is not a class of direction {self.direction}"
            )

    @classmethod
    def of(cls, sign: Sign, direction: tuple[int, int]) -> "PhaseClass":
        mask = 1 << sign.index
        if direction != (0, 0):
            mask |= 1 << (sign + Sign(*direction)).index
        return cls(mask, direction)

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    @property
    def members(self) -> tuple[Sign, ...]:
        return tuple(s for s in ALL_SIGNS if self.mask & (1 << s.index))

    def __contains__(self, sign: Sign) -> bool:
        return bool(self.mask & (1 << sign.index))

    def meets(self, other: "PhaseClass") -> bool:
        return bool(self.mask & other.mask)


def phase_of(
    sign: Sign, step: EdgeVector, coupling: PhaseCoupling = PhaseCoupling.DUAL
) -> PhaseClass:
    """The phase a sign induces on a path step."""
    if step.dx == 0 and step.dy == 0:
        raise ValueError("zero step has no phase quotient")
    return PhaseClass.of(sign, quotient_direction(step, coupling))


@dataclass(frozen=True)
class PhasedPath:
    """A lattice path with one phase per step."""

    path: LatticePath
    phases: tuple[PhaseClass, ...]

    def __post_init__(self) -> None:
        if len(self.phases) != self.path.step_count:
            raise ValueError(
                f"{len(self.phases)} phases for {self.path.step_count} steps"
            )


def attach_phases(
    path: LatticePath,
    signs: SignSequence,
    coupling: PhaseCoupling = PhaseCoupling.DUAL,
) -> PhasedPath:
    """Induce the phases of a sign sequence on a path, stepwise."""
    steps = step_vectors(path)
    if len(signs) != len(steps):
        raise ValueError(f"{len(signs)} signs for {len(steps)} steps")
    return PhasedPath(
        path, tuple(phase_of(s, v, coupling) for s, v in zip(signs, steps))
    )


class CaseKind(Enum):
    ODD_AREA = "odd-area"
    ALL_EVEN_EQUAL = "all-even-equal"
    ALL_EVEN_UNEQUAL = "all-even-unequal"
    DISJOINT_PHASES = "disjoint-phases"
    ONE_EVEN_SIDE = "one-even-side"
    CHORD_ONLY_EVEN = "chord-only-even"


class CaseOutcome(NamedTuple):
    kind: CaseKind
    factor: int
    replacements: tuple[PhaseClass, ...]  # phases for the chord, one per branch


def _chord_classes(direction: tuple[int, int]) -> list[PhaseClass]:
    seen: list[PhaseClass] = []
    for s in ALL_SIGNS:
        c = PhaseClass.of(s, direction)
        if c not in seen:
            seen.append(c)
    return seen


def classify_triangle(
    triangle: Triangle, incoming: PhaseClass, outgoing: PhaseClass
) -> CaseOutcome:
    """Factor and replacement phase(s) for one cut corner.

    ``incoming``/``outgoing`` are the phases of the two path edges at the
    pivot; the chord closing the triangle inherits a phase of direction
    incoming.direction + outgoing.direction.  Cases, in dispatch priority:

    * lattice area odd -> factor 1; both path sides are odd with independent
      mod-2 directions, so the two phases meet in exactly one sign w, and
      the replacement is the unique chord class avoiding w.
    * all three sides even -> factor 4 when the phases (both singletons)
      are equal, the replacement being that same phase; factor 0 otherwise.
    * phases disjoint -> factor 0.
    * exactly one even side, necessarily a path side -> factor 2; the
      replacement is the unique chord class meeting both phases.
    * chord the only even side -> the phases are equal two-element classes;
      both singleton chord classes inside them work, so the recursion
      branches with factor 1 on each.

    The parity taxonomy of the two path sides (even/even, one even, odd
    with equal directions, odd with independent directions) makes exactly
    one case apply; anything else raises PhaseDispatchError.
    """
    area = twice_area(*triangle)
    dir_in, dir_out = incoming.direction, outgoing.direction
    chord_dir = ((dir_in[0] + dir_out[0]) % 2, (dir_in[1] + dir_out[1]) % 2)
    # The phases must belong to the triangle they decorate: the area parity
    # is the mod-2 determinant of the two quotient directions (coordinate
    # swap flips the determinant's sign, not its parity).
    if (dir_in[0] * dir_out[1] - dir_in[1] * dir_out[0]) % 2 != area % 2:
        raise PhaseDispatchError(
            f"phases with directions {dir_in}, {dir_out} cannot sit on a "
            f"triangle of lattice area {area}"
        )

    if area % 2 == 1:
        common = incoming.mask & outgoing.mask
        if bin(common).count("1") != 1:
            raise PhaseDispatchError(
                "odd-area corner whose phases do not meet in exactly one sign"
            )
        forced = [c for c in _chord_classes(chord_dir) if not (c.mask & common)]
        if len(forced) != 1:
            raise PhaseDispatchError("no unique chord phase avoiding the common sign")
        return CaseOutcome(CaseKind.ODD_AREA, 1, (forced[0],))

    if dir_in == (0, 0) and dir_out == (0, 0):
        if incoming == outgoing:
            return CaseOutcome(CaseKind.ALL_EVEN_EQUAL, 4, (incoming,))
        return CaseOutcome(CaseKind.ALL_EVEN_UNEQUAL, 0, ())

    if not incoming.meets(outgoing):
        return CaseOutcome(CaseKind.DISJOINT_PHASES, 0, ())

    if (dir_in == (0, 0)) != (dir_out == (0, 0)):
        # one even path side; the chord is odd
        forced = [
            c
            for c in _chord_classes(chord_dir)
            if c.meets(incoming) and c.meets(outgoing)
        ]
        if len(forced) != 1:
            raise PhaseDispatchError("no unique chord phase meeting both sides")
        return CaseOutcome(CaseKind.ONE_EVEN_SIDE, 2, (forced[0],))

    # both path sides odd with equal directions: the chord is the only even
    # side, and the non-disjoint phases are cosets of the same subgroup,
    # hence equal
    if dir_in != dir_out or chord_dir != (0, 0) or incoming != outgoing:
        raise PhaseDispatchError("parity taxonomy violated at chord-only-even corner")
    branches = tuple(
        PhaseClass(1 << s.index, (0, 0)) for s in incoming.members
    )  # members are mask-ordered
    return CaseOutcome(CaseKind.CHORD_ONLY_EVEN, 1, branches)


def real_side_multiplicity(phased: PhasedPath, side: Side) -> int:
    """Signed analogue of one side of the corner-cutting recursion.

    Same pivots and cuts as the complex recursion; each cut multiplies by
    the factor of classify_triangle and re-phases the chord, summing over
    both branches in the chord-only-even case.  Chain-supported paths count
    1 whatever their phases; a stuck path counts 0.
    """
    path = phased.path
    if is_supported_on_chain(path, side):
        return 1
    k = find_pivot(path, side)
    if k is None:
        return 0
    pts = path.points
    outcome = classify_triangle(
        (pts[k - 1], pts[k], pts[k + 1]), phased.phases[k - 1], phased.phases[k]
    )
    if outcome.factor == 0:
        return 0
    shorter = cut_corner(path, k)
    before, after = phased.phases[: k - 1], phased.phases[k + 1 :]
    total = 0
    for chord_phase in outcome.replacements:
        total += real_side_multiplicity(
            PhasedPath(shorter, before + (chord_phase,) + after), side
        )
    return outcome.factor * total


def real_multiplicity(
    path: LatticePath,
    signs: SignSequence,
    coupling: PhaseCoupling = PhaseCoupling.DUAL,
) -> int:
    """Weight of a signed path in the real count: product of both sides."""
    phased = attach_phases(path, signs, coupling)
    plus = real_side_multiplicity(phased, Side.PLUS)
    if plus == 0:
        return 0
    return plus * real_side_multiplicity(phased, Side.MINUS)


def one_line_sign_sequence(degree: int, axis: BoundaryEdge) -> SignSequence:
    """The sign sequence making the one-tangent-line count fully real.

    Length d(d+3)/2 - 1.  For the hypotenuse (the line at infinity) the
    constant all-plus sequence works.  For the vertical axis the first d-1
    terms alternate between (-,+) and (+,+), ending on (+,+) (so they start
    with (-,+) for odd d and with (+,+) for even d); the rest are (+,+).
    """
    if degree < 2:
        raise ValueError(f"degree must be >= 2, got {degree}")
    n = degree * (degree + 3) // 2 - 1
    if axis is BoundaryEdge.HYPOTENUSE:
        return (PLUS_PLUS,) * n
    if axis is not BoundaryEdge.VERTICAL:
        raise ValueError(f"no one-line sign sequence for axis {axis.code!r}")
    prefix = [
        MINUS_PLUS if j % 2 == degree % 2 else PLUS_PLUS for j in range(1, degree)
    ]
    return tuple(prefix) + (PLUS_PLUS,) * (n - len(prefix))


def two_line_sign_sequence(degree: int) -> SignSequence:
    """The vertical-axis sequence truncated to two-line length d(d+3)/2 - 2.

    With tangency lines on the hypotenuse and the vertical edge, this
    sequence gives every selection of marked points a signed weight of 4,
    making the whole two-line count real.
    """
    n = degree * (degree + 3) // 2 - 2
    return one_line_sign_sequence(degree, BoundaryEdge.VERTICAL)[:n]
