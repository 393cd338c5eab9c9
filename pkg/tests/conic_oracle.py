"""Independent conic-counting oracle, by polynomial elimination.

Counts nonsingular conics through given rational base points and tangent to
given rational lines, with no lattice-path machinery involved: the conics
through the points form a linear system, tangency to a line says the
restriction of the conic to that line has vanishing discriminant (one
quadratic equation on the system's parameters), and the solutions of the
resulting square system are counted over the complex numbers, discarding
singular conics such as the double line through two base points.

Exactness note: solutions come back from sympy with algebraic-number
entries; a conic is discarded as singular only when the determinant of its
coefficient matrix provably simplifies to zero, which happens exactly for
the rational spurious solutions this configuration produces.
"""

from __future__ import annotations

import sympy as sp

x, y, z = sp.symbols("x y z")
_COEFFS = sp.symbols("q0:6")


def _conic(co):
    a, b, c, d, e, f = co
    return a * x**2 + b * x * y + c * y**2 + d * x * z + e * y * z + f * z**2


def _basis_through(points):
    """Basis of the linear system of conics through the given affine points."""
    eqs = [_conic(_COEFFS).subs({x: px, y: py, z: 1}) for px, py in points]
    (solution,) = sp.linsolve(eqs, _COEFFS)
    free = sorted(solution.free_symbols, key=lambda s: s.name)
    basis = []
    for pivot in free:
        plug = {g: (1 if g == pivot else 0) for g in free}
        basis.append(tuple(sp.nsimplify(comp.subs(plug)) for comp in solution))
    return basis


def _tangency_equation(co, line):
    """Discriminant of the conic restricted to an affine-parametrized line."""
    (px, py), (vx, vy) = line
    t = sp.Symbol("t")
    restricted = sp.expand(_conic(co).subs({x: px + t * vx, y: py + t * vy, z: 1}))
    coeffs = sp.Poly(restricted, t).all_coeffs()
    coeffs = [sp.Integer(0)] * (3 - len(coeffs)) + coeffs
    qa, qb, qc = coeffs
    return sp.expand(qb**2 - 4 * qa * qc)


def _is_singular(co) -> bool:
    a, b, c, d, e, f = co
    matrix = sp.Matrix([[2 * a, b, d], [b, 2 * c, e], [d, e, 2 * f]])
    return sp.simplify(matrix.det()) == 0


def count_tangent_conics(points, lines) -> int:
    """Number of nonsingular conics through the points tangent to the lines.

    The parameter space is stratified into affine charts (first nonzero
    projective coordinate normalized to 1) so no solution is missed, and
    solutions are deduplicated projectively.
    """
    basis = _basis_through(points)
    m = len(basis)
    params = sp.symbols(f"u0:{m}")
    co = tuple(
        sp.expand(sum(params[i] * basis[i][j] for i in range(m))) for j in range(6)
    )
    tangency = [_tangency_equation(co, line) for line in lines]

    seen = set()
    count = 0
    for chart in range(m):
        fixed = {params[j]: 0 for j in range(chart)}
        fixed[params[chart]] = 1
        equations = [sp.expand(eq.subs(fixed)) for eq in tangency]
        unknowns = list(params[chart + 1 :])
        if unknowns:
            solutions = sp.solve(equations, unknowns, dict=True)
        else:
            solutions = [{}] if all(eq == 0 for eq in equations) else []
        for sol in solutions:
            values = dict(fixed)
            values.update(sol)
            if any(getattr(v, "free_symbols", set()) for v in values.values()):
                continue  # positive-dimensional stratum: not a generic configuration
            vec = [sp.simplify(comp.subs(values)) for comp in co]
            lead = next(v for v in vec if v != 0)
            normalized = sp.Tuple(*[sp.radsimp(sp.simplify(v / lead)) for v in vec])
            if normalized in seen:
                continue
            seen.add(normalized)
            if not _is_singular(normalized):
                count += 1
    return count


# A fixed generic rational configuration: no three points collinear, none on
# the lines, and the oracle values it produced, frozen.
POINTS = ((1, 2), (3, 1), (-1, 1), (2, -3))
LINES = (
    ((0, 0), (1, 0)),   # y = 0
    ((0, 0), (0, 1)),   # x = 0
    ((1, 0), (-1, 1)),  # x + y = 1
)
FROZEN_CONIC_COUNTS = {1: 2, 2: 4, 3: 4}


def conic_count_for_lines(num_lines: int) -> int:
    """Run the oracle for the frozen configuration with the given l."""
    if not 1 <= num_lines <= 3:
        raise ValueError("the conic oracle covers 1 to 3 tangency lines")
    return count_tangent_conics(POINTS[: 5 - num_lines], LINES[:num_lines])
