"""Hand-expanded coordinate formulas, transcribed as printed.

Each function evaluates one printed expression verbatim, including its
known or suspected typos; nothing here is corrected except the definition
``A = sinh^2 psi + tanh^2 sigma`` (one printing reads ``tanh^2 psi``).
Agreement with the canonical dual-arithmetic path is judged by
:mod:`lorentz_conchoid.reconcile`, never assumed.

Notation: ``S, C = sinh psi, cosh psi``; ``T = tanh sigma``;
``H = sech^2 sigma``; ``sp, cp, sq, cq`` are sinh/cosh of ``p`` and ``q``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from . import dual as d
from .dual import DualScalar
from .dual_lorentz import DualVec3
from .errors import DegenerateConfiguration, SingularAtPsiZero
from .minkowski import Vec3L

DEGENERACY_THRESHOLD = 1e-12


@dataclass(frozen=True)
class CaseParams:
    psi: float = 0.0
    psi_star: float = 0.0
    sigma: float = 0.0
    sigma_star: float = 0.0
    p: float = 0.0
    p_star: float = 0.0
    q: float = 0.0
    q_star: float = 0.0
    lam: float = 0.0
    u: float = 0.0
    a: float = 1.0
    k: float = 1.0

    def replace(self, **kw) -> CaseParams:
        data = asdict(self)
        data.update(kw)
        return CaseParams(**data)


def A_of(params: CaseParams) -> float:
    A = math.sinh(params.psi) ** 2 + math.tanh(params.sigma) ** 2
    if A <= DEGENERACY_THRESHOLD:
        raise DegenerateConfiguration(f"A = {A:g} is degenerate")
    return A


class _Terms:
    """Shorthand values shared by the transcriptions."""

    def __init__(self, c: CaseParams):
        self.A = A_of(c)
        self.Ah = self.A ** -0.5
        self.A1 = 1.0 / self.A
        self.A32 = self.A ** -1.5
        self.A2 = self.A ** -2
        self.S = math.sinh(c.psi)
        self.C = math.cosh(c.psi)
        self.T = math.tanh(c.sigma)
        self.H = 1.0 / math.cosh(c.sigma) ** 2
        self.ch2 = math.cosh(2 * c.psi)
        self.sh2 = math.sinh(2 * c.psi)
        self.sp = math.sinh(c.p)
        self.cp = math.cosh(c.p)
        self.sq = math.sinh(c.q)
        self.cq = math.cosh(c.q)


def x_parts_printed(c: CaseParams) -> tuple[Vec3L, Vec3L]:
    """Orbit point ``x`` and its moment ``x*`` as expanded in print."""
    t = _Terms(c)
    Ah, A32, S, C, T, H = t.Ah, t.A32, t.S, t.C, t.T, t.H
    sp, cp, sq, cq = t.sp, t.cp, t.sq, t.cq
    ps, ss, pst, qst = c.psi_star, c.sigma_star, c.p_star, c.q_star
    x = Vec3L(
        c.a * (Ah * T * sp),
        c.a * (-Ah * S * C * sp + S * sq),
        c.a * (Ah * S ** 2 * sp + C * sq),
    )
    xs = Vec3L(
        c.a * (pst * Ah * T * cp
               - ps * A32 * T * S * C * sp
               - ss * A32 * T ** 2 * H * sp
               + ss * Ah * H * sp),
        c.a * (-pst * Ah * S * C * cp
               + qst * S * cq
               + ps * C * sq
               + ps * A32 * S ** 2 * C ** 2 * sp
               - ps * Ah * t.ch2 * sp
               + ss * A32 * T * H * S * C * sp),
        c.a * (ps * S * sq
               + qst * C * cq
               + A32 * ss * T * H * S ** 2 * sp
               - ps * A32 * S ** 3 * C * sp
               + ps * Ah * t.sh2 * sp
               + Ah * pst * S ** 2 * cp),
    )
    return x, xs


def y_coords_printed(c: CaseParams) -> Vec3L:
    """General congruence point ``y`` as expanded in print."""
    t = _Terms(c)
    Ah, A1, A32, A2 = t.Ah, t.A1, t.A32, t.A2
    S, C, T, H, ch2, sh2 = t.S, t.C, t.T, t.H, t.ch2, t.sh2
    sp, cp, sq, cq = t.sp, t.cp, t.sq, t.cq
    ps, ss, pst, qst, a, lam = c.psi_star, c.sigma_star, c.p_star, c.q_star, c.a, c.lam
    y1 = a ** 2 * (qst * Ah * S * ch2 * sp * cq
                   - ps * Ah * C * ch2 * sp * sq
                   + ps * A1 * S ** 2 * sp ** 2
                   + ps * sq ** 2
                   + ps * A32 * S ** 2 * ch2 * sp * sq * cp
                   + ss * A32 * S * T * H * sp * sq
                   + 2 * ss * A2 * S ** 3 * C * T * H * sp ** 2
                   - pst * Ah * S * ch2 * cp * sq) + a * lam * Ah * T * sp
    y2 = a ** 2 * (qst * Ah * T * C * sp * cq
                   - pst * Ah * T * C * sq * cp
                   - ss * A1 * H * S ** 2 * sp ** 2
                   + ss * A32 * T ** 2 * H * C * sp * sq
                   - ss * Ah * H * C * sp * sq
                   + ps * Ah * T * S * sp * sq
                   + ps * A32 * T * S * C ** 2 * sp * sq
                   + ps * A1 * T * sh2 * sp ** 2) + a * lam * (-Ah * S * C * sp + S * sq)
    y3 = a ** 2 * (qst * Ah * T * S * sp * cq
                   + ps * Ah * T * C * sq * sp
                   - ps * A1 * T * ch2 * sp ** 2
                   + ss * A1 * S * C * H * sp ** 2
                   - pst * Ah * T * S * sq * cp
                   - ss * Ah * S * sp * sq * H
                   + ps * A32 * T * S ** 2 * C * sp * sq
                   + ss * A32 * S * T ** 2 * H * sp * sq) + a * lam * (Ah * S ** 2 * sp + C * sq)
    return Vec3L(y1, y2, y3)


def y_case_v1_printed(c: CaseParams) -> Vec3L:
    """Orbit of ``v1`` (Q = 0), general sigma."""
    t = _Terms(c)
    S, C, T, H = t.S, t.C, t.T, t.H
    A = S ** 2 + T ** 2
    ps, ss, lam = c.psi_star, c.sigma_star, c.lam
    # the 2 sigma* term lacks the tanh(sigma) sech^2(sigma) factor its general form carries
    y1 = (ps * S ** 2 * A ** -1 + 2 * ss * S ** 3 * C * A ** -2) + lam * T * A ** -0.5
    y2 = (-ss * H * S ** 2 + ps * T * t.sh2) * A ** -1 - lam * S * C * A ** -0.5
    y3 = (-ps * T * t.ch2 + ss * H * S * C) * A ** -1 + lam * S ** 2 * A ** -0.5
    return Vec3L(y1, y2, y3)


def y_case_v1_sigma0_printed(c: CaseParams) -> Vec3L:
    """Orbit of ``v1`` with sigma = 0, sigma* != 0."""
    S = math.sinh(c.psi)
    if S == 0.0:
        raise SingularAtPsiZero("cosh(psi)/sinh(psi) is singular at psi = 0")
    C = math.cosh(c.psi)
    return Vec3L(c.psi_star,
                 -c.sigma_star - c.lam * C,
                 c.sigma_star * C / S + c.lam * S)


def y_case_v3_printed(c: CaseParams) -> Vec3L:
    """Orbit of ``v3`` (P = 0)."""
    return Vec3L(c.psi_star, c.lam * math.sinh(c.psi), c.lam * math.cosh(c.psi))


def v2_closed_form_printed(c: CaseParams, sinh_reading: bool = False) -> DualVec3:
    """``v2`` in dual form.

    As printed, the first component reads ``-psi~ (...)^(-1/2)`` with no
    sinh; ``sinh_reading=True`` evaluates ``-sinh(psi~) (...)^(-1/2)``.
    """
    psi = DualScalar(c.psi, c.psi_star)
    delta = DualScalar(c.sigma, c.sigma_star)
    sh = d.sinh(psi)
    ch = d.cosh(psi)
    th = d.tanh(delta)
    A = sh * sh + th * th
    if A.re <= DEGENERACY_THRESHOLD:
        raise DegenerateConfiguration(f"A = {A.re:g} is degenerate")
    r = d.inv_sqrt(A)
    first = sh if sinh_reading else psi
    return DualVec3.from_components(-first * r, -ch * th * r, -sh * th * r)


def v2_parts_printed(c: CaseParams) -> tuple[Vec3L, Vec3L]:
    """Real and dual parts of ``v2`` as expanded in print."""
    t = _Terms(c)
    Ah, A32, S, C, T, H = t.Ah, t.A32, t.S, t.C, t.T, t.H
    ps, ss = c.psi_star, c.sigma_star
    v = Vec3L(-Ah * S, -Ah * T * C, -Ah * T * S)
    vs = Vec3L(
        ps * A32 * S ** 2 * C - ps * Ah * C + ss * A32 * T * H * S,
        -ss * Ah * H * C + ps * A32 * T * S * C ** 2 - ps * Ah * T * S + ss * A32 * T ** 2 * H * C,
        ps * A32 * T * S ** 2 * C - ps * Ah * T * C + ss * A32 * T ** 2 * H * S - ss * Ah * H * S,
    )
    return v, vs


def g_coords_printed(c: CaseParams) -> Vec3L:
    """Point of the ``v2`` congruence with ruling parameter ``u``."""
    t = _Terms(c)
    Ah, A1, S, C, T, H = t.Ah, t.A1, t.S, t.C, t.T, t.H
    ps, ss, u = c.psi_star, c.sigma_star, c.u
    g1 = A1 * ps * T ** 2 + u * Ah * S
    # tanh^2(sigma) here vanishes at sigma = 0, unlike the printed special case g2 = -sigma*
    g2 = -A1 * ss * T ** 2 + u * Ah * T * C
    g3 = -A1 * ss * H * S * C + A1 * ps * T + u * Ah * T * S
    return Vec3L(g1, g2, g3)


def g_sigma0_printed(c: CaseParams) -> Vec3L:
    """``v2`` congruence with sigma = 0, sigma* != 0."""
    S = math.sinh(c.psi)
    if S == 0.0:
        raise SingularAtPsiZero("coth(psi) is singular at psi = 0")
    return Vec3L(c.u, -c.sigma_star, -c.sigma_star * math.cosh(c.psi) / S)


def g_psi0_printed(c: CaseParams) -> Vec3L:
    """``v2`` congruence with psi = 0, psi* != 0 (printed with phi for psi)."""
    # substituting psi = 0 into the general form gives psi* coth(sigma), not tanh
    return Vec3L(c.psi_star, c.u, c.psi_star * math.tanh(c.sigma))

