"""E. Study correspondence between unit dual vectors and directed lines.

A directed timelike line with unit direction ``x`` and moment
``x* = m x x`` (``m`` any point on the line) is the dual vector
``x + ε x*`` on the dual hyperbolic unit sphere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dual_lorentz import DualVec3, is_on_H2
from .errors import DegenerateConfiguration, NotOnH2, NotTimelike
from .minkowski import CausalClass, Vec3L, classify, l_cross, l_inner, l_norm

LINE_TOL = 1e-9
LIGHTLIKE_GUARD = 1e-9


@dataclass(frozen=True)
class DirectedTimelikeLine:
    direction: Vec3L
    moment: Vec3L

    def __post_init__(self):
        if abs(l_inner(self.direction, self.direction) + 1.0) > LINE_TOL:
            raise NotTimelike(f"direction {self.direction!r} is not unit timelike")
        if abs(l_inner(self.direction, self.moment)) > LINE_TOL:
            raise ValueError("moment is not orthogonal to the direction")


def line_from_point_direction(m: Vec3L, direction: Vec3L) -> DirectedTimelikeLine:
    """Line through ``m`` along ``direction`` (normalized internally)."""
    if classify(direction) is not CausalClass.TIMELIKE or abs(l_inner(direction, direction)) < LIGHTLIKE_GUARD:
        raise NotTimelike(f"{direction!r} is not a timelike direction")
    unit = direction / l_norm(direction)
    return DirectedTimelikeLine(unit, l_cross(m, unit))


def line_to_dual(line: DirectedTimelikeLine) -> DualVec3:
    return DualVec3(line.direction, line.moment)


def dual_to_line(a: DualVec3, tol: float = LINE_TOL) -> DirectedTimelikeLine:
    if not is_on_H2(a, tol):
        raise NotOnH2(f"{a!r} is not on the dual hyperbolic unit sphere")
    return DirectedTimelikeLine(a.re, a.du)


def point_at(a: DualVec3, lam: float, tol: float = LINE_TOL) -> Vec3L:
    """Point ``x x x* + λ x`` of the timelike line represented by ``a``.

    ``λ = 0`` gives the foot of the perpendicular from the origin.
    """
    if not is_on_H2(a, tol):
        raise NotOnH2(f"{a!r} is not on the dual hyperbolic unit sphere")
    return l_cross(a.re, a.du) + a.re * lam


def ruling_point(a: DualVec3, lam: float) -> Vec3L:
    """Point recovery for any non-null dual vector.

    Returns ``s (x x x* + λ x)`` with ``s = +1`` for a timelike real part
    and ``s = -1`` for a spacelike one. For a unit vector
    ``x x x* = <m,x> x - <x,x> m``, so ``s`` equals ``-<x,x>`` and the
    ``λ = 0`` point is the foot of the perpendicular on either sphere.
    On the dual hyperbolic unit sphere this coincides with :func:`point_at`.
    """
    kind = classify(a.re)
    if kind is CausalClass.LIGHTLIKE or (a.re.c1 == a.re.c2 == a.re.c3 == 0.0):
        raise DegenerateConfiguration(f"{a!r} has a null real part")
    s = 1.0 if kind is CausalClass.TIMELIKE else -1.0
    return (l_cross(a.re, a.du) + a.re * lam) * s
