"""Dual hyperbolic conchoidal motion.

The moving frame ``{v1, v2, v3}`` is evaluated from its closed form in
generic DualScalar arithmetic. This is the canonical computation path that
the transcribed coordinate formulas in :mod:`printed_forms` are checked
against.

The fixed frame ``{u1, u2, u3}`` is the standard basis with zero dual
parts; ``u3`` is timelike.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import dual as d
from .dual import ONE, ZERO, DualScalar, dual
from .dual_lorentz import DualMatrix3, DualVec3, dl_cross, dl_inner, triple_product
from .errors import DegenerateConfiguration
from .minkowski import E1, E2, E3

DEGENERACY_THRESHOLD = 1e-12

U1 = DualVec3(E1)
U2 = DualVec3(E2)
U3 = DualVec3(E3)


@dataclass(frozen=True)
class MotionConfig:
    """Fixed dual hyperbolic angle ``delta`` of the axis ``c`` from ``u3``.

    ``lambda_sign`` selects the branch of the square root; ``+1`` is the
    conventional choice.
    """

    delta: DualScalar
    lambda_sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "delta", dual(self.delta))
        if self.lambda_sign not in (1, -1):
            raise ValueError("lambda_sign must be +1 or -1")


@dataclass(frozen=True)
class FramePose:
    psi: DualScalar
    v1: DualVec3
    v2: DualVec3
    v3: DualVec3
    A: DualScalar


@dataclass(frozen=True)
class OrbitSpec:
    """Orbit point parameters ``P``, ``Q`` and ``a = 1 / sinh(P + Q)``."""

    P: DualScalar
    Q: DualScalar
    a: DualScalar

    @classmethod
    def from_angles(cls, P, Q) -> OrbitSpec:
        P, Q = dual(P), dual(Q)
        s = d.sinh(P + Q)
        if s.re == 0.0:
            raise DegenerateConfiguration("sinh(p + q) vanishes; a = 1/sinh(P+Q) undefined")
        return cls(P, Q, ONE / s)

    def is_quarter_turn(self, tol: float = 1e-12) -> bool:
        """Whether ``p + q`` equals pi/2 (the constant-``a`` convention)."""
        return abs(self.P.re + self.Q.re - math.pi / 2) <= tol


@dataclass(frozen=True)
class FrameResiduals:
    unit_norm: DualScalar
    v3_orthogonal: DualScalar
    c_plane: DualScalar
    coplanarity: DualScalar

    def max_abs(self) -> float:
        return max(abs(self.unit_norm), abs(self.v3_orthogonal), abs(self.c_plane), abs(self.coplanarity))

    def to_dict(self) -> dict:
        return {k: [v.re, v.du] for k, v in
                (("unit_norm", self.unit_norm), ("v3_orthogonal", self.v3_orthogonal), ("c_plane", self.c_plane),
                 ("coplanarity", self.coplanarity))}


def c_axis(cfg: MotionConfig) -> DualVec3:
    """Fixed axis ``c = u3 cosh(delta) + u1 sinh(delta)``."""
    return DualVec3.from_components(d.sinh(cfg.delta), ZERO, d.cosh(cfg.delta))


def frame_at(cfg: MotionConfig, psi, threshold: float = DEGENERACY_THRESHOLD) -> FramePose:
    """Moving frame at motion parameter ``psi``.

    Raises
    ------
    DegenerateConfiguration
        If ``A = sinh^2 psi + tanh^2 delta`` has real part at or below
        ``threshold`` (both angles zero).
    """
    psi = dual(psi)
    sh = d.sinh(psi)
    ch = d.cosh(psi)
    th = d.tanh(cfg.delta)
    A = sh * sh + th * th
    if A.re <= threshold:
        raise DegenerateConfiguration(
            f"A = sinh^2(psi) + tanh^2(delta) = {A.re:g} is degenerate"
        )
    r = d.inv_sqrt(A)
    lam = cfg.lambda_sign * sh * r
    v1 = DualVec3.from_components(-cfg.lambda_sign * th * r, lam * ch, lam * sh)
    v3 = DualVec3.from_components(ZERO, sh, ch)
    v2 = dl_cross(v1, v3)
    return FramePose(psi, v1, v2, v3, A)


def verify_frame_constraints(pose: FramePose, cfg: MotionConfig) -> FrameResiduals:
    """Residuals of the three defining equations for ``v1`` and of coplanarity."""
    a1, a2, a3 = pose.v1.components()
    sh = d.sinh(pose.psi)
    ch = d.cosh(pose.psi)
    sd = d.sinh(cfg.delta)
    cd = d.cosh(cfg.delta)
    unit_norm = a1 * a1 + a2 * a2 - a3 * a3 - ONE
    v3_orthogonal = -a3 * ch + a2 * sh
    c_plane = a1 * sh * cd + a2 * ch * sd - a3 * sh * sd
    cop = triple_product(pose.v1, pose.v3, c_axis(cfg))
    return FrameResiduals(unit_norm, v3_orthogonal, c_plane, cop)


def orthonormality_residual(pose: FramePose) -> float:
    """Largest deviation of the frame's dual Gram matrix from diag(1, 1, -1)."""
    vs = (pose.v1, pose.v2, pose.v3)
    target = (1.0, 1.0, -1.0)
    worst = 0.0
    for i in range(3):
        for j in range(i, 3):
            g = dl_inner(vs[i], vs[j])
            want = target[i] if i == j else 0.0
            worst = max(worst, abs(g.re - want), abs(g.du))
    return worst


def orbit_point(pose: FramePose, spec: OrbitSpec) -> DualVec3:
    """``x = a (v1 sinh P + v3 sinh Q)``; not normalized.

    Its pseudo-norm satisfies ``<x, x> sinh(P + Q) = sinh(P - Q)``.
    """
    return (pose.v1.scale(d.sinh(spec.P)) + pose.v3.scale(d.sinh(spec.Q))).scale(spec.a)


def frame_matrix(pose: FramePose) -> DualMatrix3:
    return DualMatrix3.from_row_vectors(pose.v1, pose.v2, pose.v3)
