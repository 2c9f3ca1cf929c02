"""Compare each transcribed expansion with the canonical dual-arithmetic path.

Each registered formula draws its own parameter samples from a SplitMix64
stream keyed by ``(seed, formula id)``, evaluates the transcription and
the canonical value, and reports the largest absolute deviation per
output coordinate. Formulas of kind ``identity`` compare an implicit
relation on the transcription's own output against zero.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import Callable, Sequence

from . import printed_forms as pf
from .dual import DualScalar
from .errors import ConchoidError
from .motion import MotionConfig, OrbitSpec, frame_at, orbit_point
from .printed_forms import CaseParams
from .rng import SplitMix64, stream
from .sampler import residual_helicoid, residual_v1_surface, residual_v3_hyperbola
from .study import ruling_point

DEFAULT_TOL = 1e-9
DEFAULT_SAMPLES = 1000


@dataclass
class ReconcileReport:
    formula: str
    samples: int
    skipped: int
    max_dev: list[float]
    tol: float
    verdict: str
    worst: dict | None = None

    def to_dict(self) -> dict:
        return {
            "formula": self.formula,
            "samples": self.samples,
            "skipped": self.skipped,
            "max_dev": self.max_dev,
            "tol": self.tol,
            "verdict": self.verdict,
            "worst": self.worst,
        }


@dataclass(frozen=True)
class Formula:
    id: str
    description: str
    cluster: str  # "consistency" or "suspect"
    draw: Callable[[SplitMix64], CaseParams]
    printed: Callable[[CaseParams], Sequence[float]]
    canonical: Callable[[CaseParams], Sequence[float]]


# -- parameter draws ---------------------------------------------------------

def _common(r: SplitMix64, psi_positive: bool = False, sigma: float | None = None) -> dict:
    return dict(
        psi=r.uniform(0.2, 2.0) if psi_positive else r.signed_band(0.2, 2.0),
        psi_star=r.uniform(-1.0, 1.0),
        sigma=r.signed_band(0.1, 1.5) if sigma is None else sigma,
        sigma_star=r.signed_band(0.05, 1.0),
        lam=r.uniform(-2.0, 2.0),
        u=r.uniform(-2.0, 2.0),
    )


def _draw_general(r: SplitMix64) -> CaseParams:
    base = _common(r)
    p = r.uniform(0.1, 1.2)
    q = r.uniform(0.1, 1.2)
    import math

    return CaseParams(**base, p=p, p_star=r.uniform(-1, 1), q=q, q_star=r.uniform(-1, 1),
                      a=1.0 / math.sinh(p + q))


def _draw_q0(r: SplitMix64, sigma: float | None = None, psi_positive: bool = False) -> CaseParams:
    import math

    base = _common(r, psi_positive=psi_positive, sigma=sigma)
    p = r.uniform(0.1, 1.2)
    return CaseParams(**base, p=p, p_star=r.uniform(-1, 1), a=1.0 / math.sinh(p))


def _draw_p0(r: SplitMix64) -> CaseParams:
    import math

    base = _common(r)
    q = r.uniform(0.1, 1.2)
    return CaseParams(**base, q=q, q_star=r.uniform(-1, 1), a=1.0 / math.sinh(q))


def _draw_frame(r: SplitMix64) -> CaseParams:
    return CaseParams(**_common(r))


def _draw_sigma0(r: SplitMix64) -> CaseParams:
    base = _common(r, psi_positive=True, sigma=0.0)
    return CaseParams(**base, k=r.uniform(0.5, 2.0))


def _draw_psi0(r: SplitMix64) -> CaseParams:
    base = _common(r)
    base["psi"] = 0.0
    base["psi_star"] = r.signed_band(0.05, 1.0)
    base["sigma"] = r.signed_band(0.2, 1.5)
    return CaseParams(**base, k=r.uniform(0.5, 2.0))


# -- canonical evaluators ----------------------------------------------------

def _pose(c: CaseParams):
    cfg = MotionConfig(DualScalar(c.sigma, c.sigma_star))
    return frame_at(cfg, DualScalar(c.psi, c.psi_star))


def _orbit(c: CaseParams):
    spec = OrbitSpec.from_angles(DualScalar(c.p, c.p_star), DualScalar(c.q, c.q_star))
    return orbit_point(_pose(c), spec)


def _canon_x(c):
    return list(_orbit(c).re)


def _canon_xs(c):
    return list(_orbit(c).du)


def _canon_y(c):
    return list(ruling_point(_orbit(c), c.lam))


def _canon_v2_dual(c):
    v2 = _pose(c).v2
    return list(v2.re) + list(v2.du)


def _canon_g(c):
    return list(ruling_point(_pose(c).v2, c.u))


def _dual_list(v):
    return list(v.re) + list(v.du)


def _zeros(n):
    return lambda c: [0.0] * n


def _with_u(c: CaseParams, u: float) -> CaseParams:
    return c.replace(u=u)


FORMULAS: dict[str, Formula] = {}


def _register(*formulas: Formula) -> None:
    for f in formulas:
        FORMULAS[f.id] = f


_register(
    Formula("orbit_x_real", "orbit point x, real part", "suspect",
            _draw_general, lambda c: list(pf.x_parts_printed(c)[0]), _canon_x),
    Formula("orbit_x_dual", "orbit point x*, dual part", "suspect",
            _draw_general, lambda c: list(pf.x_parts_printed(c)[1]), _canon_xs),
    Formula("congruence_y", "general congruence point y", "suspect",
            _draw_general, lambda c: list(pf.y_coords_printed(c)), _canon_y),
    Formula("v1_congruence", "v1 congruence point (Q = 0)", "suspect",
            _draw_q0, lambda c: list(pf.y_case_v1_printed(c)), _canon_y),
    Formula("v1_congruence_at_sigma0", "v1 congruence point (Q = 0) at sigma = 0", "suspect",
            lambda r: _draw_q0(r, sigma=0.0, psi_positive=True),
            lambda c: list(pf.y_case_v1_printed(c)), _canon_y),
    Formula("v1_congruence_sigma0", "v1 congruence, sigma = 0, vs canonical", "consistency",
            lambda r: _draw_q0(r, sigma=0.0, psi_positive=True),
            lambda c: list(pf.y_case_v1_sigma0_printed(c)), _canon_y),
    Formula("v1_sigma0_surface", "surface relation on the sigma = 0 v1 congruence", "consistency",
            lambda r: _draw_q0(r, sigma=0.0, psi_positive=True),
            lambda c: [residual_v1_surface(pf.y_case_v1_sigma0_printed(c), c.psi, c.lam)],
            _zeros(1)),
    Formula("v3_congruence", "v3 congruence point (P = 0)", "consistency",
            _draw_p0, lambda c: list(pf.y_case_v3_printed(c)), _canon_y),
    Formula("v3_hyperbola", "hyperbola relation on the v3 congruence", "consistency",
            _draw_p0, lambda c: list(residual_v3_hyperbola(pf.y_case_v3_printed(c), c.lam, c.psi_star)),
            _zeros(2)),
    Formula("v2_closed_form", "v2 dual closed form, printed leading -psi~", "suspect",
            _draw_frame, lambda c: _dual_list(pf.v2_closed_form_printed(c)), _canon_v2_dual),
    Formula("v2_closed_form_sinh", "v2 dual closed form, -sinh(psi~) reading", "suspect",
            _draw_frame, lambda c: _dual_list(pf.v2_closed_form_printed(c, sinh_reading=True)),
            _canon_v2_dual),
    Formula("v2_real", "v2 real part", "consistency",
            _draw_frame, lambda c: list(pf.v2_parts_printed(c)[0]),
            lambda c: list(_pose(c).v2.re)),
    Formula("v2_dual", "v2 dual part", "suspect",
            _draw_frame, lambda c: list(pf.v2_parts_printed(c)[1]),
            lambda c: list(_pose(c).v2.du)),
    Formula("v2_congruence", "v2 congruence point g", "suspect",
            _draw_frame, lambda c: list(pf.g_coords_printed(c)), _canon_g),
    Formula("v2_congruence_at_sigma0", "general g form evaluated at sigma = 0", "suspect",
            _draw_sigma0, lambda c: list(pf.g_coords_printed(c)), _canon_g),
    Formula("v2_congruence_sigma0", "v2 congruence, sigma = 0, special form", "suspect",
            _draw_sigma0, lambda c: list(pf.g_sigma0_printed(c)), _canon_g),
    Formula("helicoid_sigma0", "helicoid relation on the sigma = 0 special form, u = k psi", "consistency",
            _draw_sigma0,
            lambda c: [residual_helicoid(pf.g_sigma0_printed(_with_u(c, c.k * c.psi)), c.k, "sigma0")],
            _zeros(1)),
    Formula("v2_congruence_psi0", "v2 congruence, psi = 0, printed tanh(sigma) form", "suspect",
            _draw_psi0, lambda c: list(pf.g_psi0_printed(c)), _canon_g),
    Formula("v2_congruence_at_psi0", "general g form evaluated at psi = 0", "suspect",
            _draw_psi0, lambda c: list(pf.g_coords_printed(c)), _canon_g),
    Formula("helicoid_psi0", "helicoid relation on the printed psi = 0 form, u = k sigma",
            "consistency", _draw_psi0,
            lambda c: [residual_helicoid(pf.g_psi0_printed(_with_u(c, c.k * c.sigma)), c.k, "psi0")],
            _zeros(1)),
)

CONSISTENCY = tuple(f.id for f in FORMULAS.values() if f.cluster == "consistency")
SUSPECT = tuple(f.id for f in FORMULAS.values() if f.cluster == "suspect")


def reconcile(formula_id: str, samples: int = DEFAULT_SAMPLES, seed: int = 42,
              tol: float = DEFAULT_TOL) -> ReconcileReport:
    """Run one formula against the canonical path on a seeded sample grid."""
    f = FORMULAS[formula_id]
    r = stream(seed, formula_id)
    max_dev: list[float] | None = None
    skipped = 0
    worst = None
    worst_dev = -1.0
    for i in range(samples):
        params = f.draw(r)
        try:
            got = f.printed(params)
            want = f.canonical(params)
        except ConchoidError:
            skipped += 1
            continue
        devs = [abs(g - w) for g, w in zip(got, want)]
        if len(devs) == 6:
            # dual vector: fold real and dual parts per coordinate
            devs = [max(devs[j], devs[j + 3]) for j in range(3)]
        if max_dev is None:
            max_dev = devs
        else:
            max_dev = [max(a, b) for a, b in zip(max_dev, devs)]
        if max(devs) > worst_dev:
            worst_dev = max(devs)
            worst = {"index": i, "params": asdict(params), "printed": list(got),
                     "canonical": list(want), "dev": worst_dev}
    max_dev = max_dev or []
    verdict = "MATCH" if max_dev and max(max_dev) <= tol else "MISMATCH"
    return ReconcileReport(formula_id, samples, skipped, max_dev, tol, verdict, worst)


def reconcile_all(samples: int = DEFAULT_SAMPLES, seed: int = 42,
                  tol: float = DEFAULT_TOL) -> list[ReconcileReport]:
    return [reconcile(fid, samples, seed, tol) for fid in FORMULAS]


def load_expected_verdicts() -> dict:
    """The committed verdict ledger (``data/expected_verdicts.json``)."""
    text = resources.files("lorentz_conchoid").joinpath("data/expected_verdicts.json").read_text()
    return json.loads(text)
