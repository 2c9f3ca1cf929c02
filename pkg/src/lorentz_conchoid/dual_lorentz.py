"""Dual Lorentzian vectors ``a + ε a*`` and 3x3 dual matrices."""

from __future__ import annotations

from typing import Sequence

from .dual import ONE, ZERO, DualScalar, d_add, d_mul, dual
from .minkowski import CausalClass, Vec3L, classify, l_cross, l_inner, ZERO3


class DualVec3:
    """Dual vector with real (direction) part ``re`` and dual (moment) part ``du``."""

    __slots__ = ("re", "du")

    def __init__(self, re: Vec3L, du: Vec3L = ZERO3):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "du", du)

    def __setattr__(self, name, value):
        raise AttributeError("DualVec3 is immutable")

    def __reduce__(self):
        return (DualVec3, (self.re, self.du))

    @classmethod
    def from_components(cls, x, y, z) -> DualVec3:
        x, y, z = dual(x), dual(y), dual(z)
        return cls(Vec3L(x.re, y.re, z.re), Vec3L(x.du, y.du, z.du))

    def __repr__(self) -> str:
        return f"DualVec3({self.re!r}, {self.du!r})"

    def __getitem__(self, i: int) -> DualScalar:
        return DualScalar(self.re[i], self.du[i])

    def components(self) -> tuple[DualScalar, DualScalar, DualScalar]:
        return self[0], self[1], self[2]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualVec3):
            return NotImplemented
        return all(a == b for a, b in zip(self.components(), other.components()))

    __hash__ = None

    def __add__(self, other: DualVec3) -> DualVec3:
        return DualVec3(self.re + other.re, self.du + other.du)

    def __sub__(self, other: DualVec3) -> DualVec3:
        return DualVec3(self.re - other.re, self.du - other.du)

    def __neg__(self) -> DualVec3:
        return DualVec3(-self.re, -self.du)

    def scale(self, lam) -> DualVec3:
        """Module action ``λ ã = λ a + ε(λ a* + λ* a)``."""
        lam = dual(lam)
        return DualVec3(self.re * lam.re, self.du * lam.re + self.re * lam.du)

    __mul__ = scale
    __rmul__ = scale

    def max_abs(self) -> float:
        return max(max(abs(c) for c in self.re), max(abs(c) for c in self.du))


def dl_inner(a: DualVec3, b: DualVec3) -> DualScalar:
    return DualScalar(l_inner(a.re, b.re), l_inner(a.re, b.du) + l_inner(a.du, b.re))


def dl_cross(a: DualVec3, b: DualVec3) -> DualVec3:
    return DualVec3(l_cross(a.re, b.re), l_cross(a.du, b.re) + l_cross(a.re, b.du))


def triple_product(a: DualVec3, b: DualVec3, c: DualVec3) -> DualScalar:
    """``<a x b, c>``; equals ``-dual_det(a, b, c)``."""
    return dl_inner(dl_cross(a, b), c)


def dual_det(a: DualVec3, b: DualVec3, c: DualVec3) -> DualScalar:
    """Determinant of the dual matrix with rows a, b, c by cofactor expansion.

    Deliberately written in DualScalar arithmetic only, independent of
    ``dl_cross``/``dl_inner``, so it can serve as an oracle for them.
    """
    a1, a2, a3 = a.components()
    b1, b2, b3 = b.components()
    c1, c2, c3 = c.components()
    return a1 * (b2 * c3 - b3 * c2) - a2 * (b1 * c3 - b3 * c1) + a3 * (b1 * c2 - b2 * c1)


def causal_class(a: DualVec3) -> CausalClass:
    """Causal character of a dual vector, decided by its real part alone."""
    return classify(a.re)


def is_on_H2(a: DualVec3, tol: float = 1e-9) -> bool:
    """Membership of the dual hyperbolic unit sphere."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return abs(l_inner(a.re, a.re) + 1.0) <= tol and abs(l_inner(a.re, a.du)) <= tol


def is_on_S2(a: DualVec3, tol: float = 1e-9) -> bool:
    """Membership of the dual Lorentzian unit sphere."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return abs(l_inner(a.re, a.re) - 1.0) <= tol and abs(l_inner(a.re, a.du)) <= tol


class DualMatrix3:
    """3x3 matrix of DualScalar entries, stored row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(dual(x) for x in row) for row in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("DualMatrix3 needs exactly 3x3 entries")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("DualMatrix3 is immutable")

    @classmethod
    def from_row_vectors(cls, r1: DualVec3, r2: DualVec3, r3: DualVec3) -> DualMatrix3:
        return cls([r1.components(), r2.components(), r3.components()])

    @classmethod
    def identity(cls) -> DualMatrix3:
        return cls([[ONE if i == j else ZERO for j in range(3)] for i in range(3)])

    def __getitem__(self, ij: tuple[int, int]) -> DualScalar:
        i, j = ij
        return self.rows[i][j]

    def __repr__(self) -> str:
        return f"DualMatrix3({[list(r) for r in self.rows]!r})"

    def transpose(self) -> DualMatrix3:
        return DualMatrix3([[self.rows[j][i] for j in range(3)] for i in range(3)])

    def __matmul__(self, other: DualMatrix3) -> DualMatrix3:
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = ZERO
                for k in range(3):
                    acc = d_add(acc, d_mul(self.rows[i][k], other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return DualMatrix3(out)

    def to_lists(self) -> list[list[list[float]]]:
        return [[[x.re, x.du] for x in row] for row in self.rows]


SIGNATURE = DualMatrix3([[1, 0, 0], [0, 1, 0], [0, 0, -1]])


def is_dual_lorentz_orthogonal(m: DualMatrix3, tol: float = 1e-12) -> bool:
    """True iff ``M S M^T = S`` entrywise (both parts) within ``tol``.

    Since ``S^2 = I`` this is equivalent to ``M^-1 = S M^T S`` and avoids
    inverting a dual matrix.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    return orthogonality_residual(m) <= tol


def orthogonality_residual(m: DualMatrix3) -> float:
    prod = m @ SIGNATURE @ m.transpose()
    worst = 0.0
    for i in range(3):
        for j in range(3):
            d = prod[i, j] - SIGNATURE[i, j]
            worst = max(worst, abs(d.re), abs(d.du))
    return worst
