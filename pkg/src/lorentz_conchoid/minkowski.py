"""Real vector algebra of Minkowski 3-space with signature (+, +, -).

The third coordinate is the timelike one. The cross product uses the
component formula ``(a3 b2 - a2 b3, a1 b3 - a3 b1, a1 b2 - a2 b1)``, which
is consistent with ``<a x b, c> = -det(a, b, c)``.
"""

from __future__ import annotations

import enum
import math

from .errors import NonFiniteError


class Vec3L:
    """Immutable real 3-vector; ``c3`` is the timelike coordinate."""

    __slots__ = ("c1", "c2", "c3")

    def __init__(self, c1: float, c2: float, c3: float):
        c1, c2, c3 = float(c1), float(c2), float(c3)
        if not (math.isfinite(c1) and math.isfinite(c2) and math.isfinite(c3)):
            raise NonFiniteError(f"non-finite vector ({c1!r}, {c2!r}, {c3!r})")
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)
        object.__setattr__(self, "c3", c3)

    def __setattr__(self, name, value):
        raise AttributeError("Vec3L is immutable")

    def __reduce__(self):
        return (Vec3L, (self.c1, self.c2, self.c3))

    def __repr__(self) -> str:
        return f"Vec3L({self.c1!r}, {self.c2!r}, {self.c3!r})"

    def __iter__(self):
        yield self.c1
        yield self.c2
        yield self.c3

    def __getitem__(self, i: int) -> float:
        return (self.c1, self.c2, self.c3)[i]

    def __len__(self) -> int:
        return 3

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vec3L):
            return NotImplemented
        return self.c1 == other.c1 and self.c2 == other.c2 and self.c3 == other.c3

    def __hash__(self) -> int:
        return hash((self.c1, self.c2, self.c3))

    def __add__(self, other: Vec3L) -> Vec3L:
        return Vec3L(self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3)

    def __sub__(self, other: Vec3L) -> Vec3L:
        return Vec3L(self.c1 - other.c1, self.c2 - other.c2, self.c3 - other.c3)

    def __neg__(self) -> Vec3L:
        return Vec3L(-self.c1, -self.c2, -self.c3)

    def __mul__(self, s: float) -> Vec3L:
        return Vec3L(s * self.c1, s * self.c2, s * self.c3)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> Vec3L:
        return Vec3L(self.c1 / s, self.c2 / s, self.c3 / s)

    def to_list(self) -> list[float]:
        return [self.c1, self.c2, self.c3]


ZERO3 = Vec3L(0.0, 0.0, 0.0)
E1 = Vec3L(1.0, 0.0, 0.0)
E2 = Vec3L(0.0, 1.0, 0.0)
E3 = Vec3L(0.0, 0.0, 1.0)


class CausalClass(enum.Enum):
    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"
    LIGHTLIKE = "lightlike"


def l_inner(a: Vec3L, b: Vec3L) -> float:
    return a.c1 * b.c1 + a.c2 * b.c2 - a.c3 * b.c3


def l_cross(a: Vec3L, b: Vec3L) -> Vec3L:
    return Vec3L(
        a.c3 * b.c2 - a.c2 * b.c3,
        a.c1 * b.c3 - a.c3 * b.c1,
        a.c1 * b.c2 - a.c2 * b.c1,
    )


def l_norm(a: Vec3L) -> float:
    return math.sqrt(abs(l_inner(a, a)))


def euclid_sq(a: Vec3L) -> float:
    return a.c1 * a.c1 + a.c2 * a.c2 + a.c3 * a.c3


def euclid_norm(a: Vec3L) -> float:
    return math.sqrt(euclid_sq(a))


def det3(a: Vec3L, b: Vec3L, c: Vec3L) -> float:
    """Determinant of the matrix with rows a, b, c."""
    return (a.c1 * (b.c2 * c.c3 - b.c3 * c.c2)
            - a.c2 * (b.c1 * c.c3 - b.c3 * c.c1)
            + a.c3 * (b.c1 * c.c2 - b.c2 * c.c1))


def classify(a: Vec3L, band: float | None = None) -> CausalClass:
    """Causal character of ``a``.

    ``band`` is the half-width of the lightlike band around
    ``<a, a> = 0``; it defaults to ``1e-12 * |a|^2`` (Euclidean) so the
    test is scale invariant. The zero vector is spacelike.
    """
    e2 = euclid_sq(a)
    if e2 == 0.0:
        return CausalClass.SPACELIKE
    if band is None:
        band = 1e-12 * e2
    q = l_inner(a, a)
    if abs(q) <= band:
        return CausalClass.LIGHTLIKE
    return CausalClass.TIMELIKE if q < 0.0 else CausalClass.SPACELIKE


def isclose3(a: Vec3L, b: Vec3L, tol: float = 1e-12) -> bool:
    scale = max(1.0, euclid_norm(a), euclid_norm(b))
    return all(abs(x - y) <= tol * scale for x, y in zip(a, b))
