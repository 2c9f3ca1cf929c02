"""Property and reproduction suites behind ``verify`` and the acceptance tests.

Each suite returns a plain JSON-ready dict::

    {"suite": name, "passed": bool, "samples": n, "checks": {check: {"max", "tol", "passed"}}}

Randomized suites draw from :mod:`rng` so reports are reproducible from the seed.
"""

from __future__ import annotations

import math

from . import dual as d
from .dual import DualScalar
from .dual_lorentz import (DualVec3, dl_cross, dl_inner, dual_det, orthogonality_residual,
                           triple_product)
from .minkowski import Vec3L, euclid_norm, l_cross
from .motion import (MotionConfig, OrbitSpec, c_axis, frame_at, frame_matrix, orbit_point,
                     orthonormality_residual, verify_frame_constraints)
from .printed_forms import CaseParams, g_sigma0_printed
from .reconcile import CONSISTENCY, FORMULAS, load_expected_verdicts, reconcile_all
from .rng import SplitMix64, stream
from .sampler import (AxisRange, GridSpec, congruence_point, residual_helicoid,
                      residual_v1_surface, residual_v3_hyperbola, sample_congruence)
from .study import dual_to_line, line_from_point_direction, line_to_dual, point_at

SUITES = ("dual", "identities", "frame", "study", "orbit", "v1_surface", "v3_hyperbola",
          "helicoid", "reconcile")


class _Checks:
    def __init__(self):
        self.data: dict[str, dict] = {}

    def add(self, name: str, value: float, tol: float) -> None:
        entry = self.data.setdefault(name, {"max": 0.0, "tol": tol})
        entry["max"] = max(entry["max"], value)

    def result(self, suite: str, samples: int, **extra) -> dict:
        for entry in self.data.values():
            entry["passed"] = entry["max"] <= entry["tol"]
        return {"suite": suite,
                "passed": all(e["passed"] for e in self.data.values()),
                "samples": samples, **extra, "checks": self.data}


def _rand_dual(r: SplitMix64, lo: float = -2.0, hi: float = 2.0) -> DualScalar:
    return DualScalar(r.uniform(lo, hi), r.uniform(lo, hi))


def _rand_dvec(r: SplitMix64) -> DualVec3:
    return DualVec3.from_components(_rand_dual(r), _rand_dual(r), _rand_dual(r))


def _dev(x: DualScalar, y: DualScalar, scale: float = 1.0) -> float:
    return max(abs(x.re - y.re), abs(x.du - y.du)) / scale


def _vdev(a: DualVec3, b: DualVec3) -> float:
    return max(max(abs(x - y) for x, y in zip(a.re, b.re)),
               max(abs(x - y) for x, y in zip(a.du, b.du)))


def suite_dual(samples: int = 1000, seed: int = 42) -> dict:
    """Ring axioms, nilpotency of ε, division and hyperbolic lift identities."""
    r = stream(seed, "dual")
    ck = _Checks()
    n_div = 0
    for _ in range(samples):
        a, b, c = _rand_dual(r), _rand_dual(r), _rand_dual(r)
        m = max(1.0, abs(a), abs(b), abs(c))
        ck.add("add_associative", _dev((a + b) + c, a + (b + c), m), 1e-14)
        ck.add("add_commutative", _dev(a + b, b + a, m), 1e-14)
        ck.add("mul_commutative", _dev(a * b, b * a, m * m), 1e-14)
        ck.add("mul_associative", _dev((a * b) * c, a * (b * c), m ** 3), 1e-14)
        ck.add("distributive", _dev(a * (b + c), a * b + a * c, m * m), 1e-14)
        e1, e2 = DualScalar(0.0, a.du), DualScalar(0.0, b.du)
        sq = e1 * e2
        ck.add("eps_squared_zero", max(abs(sq.re), abs(sq.du)), 0.0)
        if abs(b.re) > 1e-6:
            n_div += 1
            q = d.d_div(a * b, b)
            # relative to the magnitude of the terms that cancel in the dual part
            scale = max(1.0, abs(a.re), abs(a.du) + abs(a.re) * abs(b.du) / abs(b.re))
            ck.add("division_inverts_multiplication", _dev(q, a, scale), 1e-12)
        x = DualScalar(r.uniform(-5, 5), r.uniform(-2, 2))
        ch, sh = d.cosh(x), d.sinh(x)
        s = max(1.0, ch.re * ch.re, abs(ch.re * ch.du))
        ck.add("cosh2_minus_sinh2", _dev(ch * ch - sh * sh, d.ONE, s), 1e-12)
        ck.add("tanh_is_sinh_over_cosh", _dev(d.tanh(x), sh / ch), 1e-12)
    return ck.result("dual", samples, seed=seed, division_samples=n_div)


def suite_identities(samples: int = 1000, seed: int = 42) -> dict:
    """The five dual vector identities plus the determinant oracle."""
    r = stream(seed, "identities")
    ck = _Checks()
    tol = 1e-12
    for _ in range(samples):
        a, b, c, e = (_rand_dvec(r) for _ in range(4))
        m = max(1.0, a.max_abs(), b.max_abs(), c.max_abs(), e.max_abs())
        axb = dl_cross(a, b)
        ck.add("antisymmetry", _vdev(axb, -dl_cross(b, a)) / m ** 2, tol)
        ck.add("orthogonal_to_a", _dev(dl_inner(axb, a), d.ZERO, m ** 3), tol)
        ck.add("orthogonal_to_b", _dev(dl_inner(axb, b), d.ZERO, m ** 3), tol)
        ck.add("triple_is_minus_det", _dev(triple_product(a, b, c), -dual_det(a, b, c), m ** 3), tol)
        lhs = dl_cross(axb, c)
        rhs = b.scale(-dl_inner(a, c)) + a.scale(dl_inner(b, c))
        ck.add("double_cross", _vdev(lhs, rhs) / m ** 3, tol)
        lhs4 = dl_inner(axb, dl_cross(c, e))
        rhs4 = -dl_inner(a, c) * dl_inner(b, e) + dl_inner(a, e) * dl_inner(b, c)
        ck.add("lagrange", _dev(lhs4, rhs4, m ** 4), tol)
    return ck.result("identities", samples, seed=seed)


def frame_grid() -> list[tuple[float, float, float, float]]:
    """(psi, psi*, sigma, sigma*) grid of the frame suite."""
    psis = [-2.0 + 0.5 * i for i in range(9)]
    stars = (-1.0, 0.0, 1.0)
    out = []
    for sigma in (-1.5, -0.5, 0.5, 1.5):
        for psi in psis:
            for ps in stars:
                for ss in stars:
                    out.append((psi, ps, sigma, ss))
    for psi in psis:
        if psi == 0.0:
            continue
        for ps in stars:
            for ss in stars:
                out.append((psi, ps, 0.0, ss))
    return out


def suite_frame(samples: int = 0, seed: int = 42) -> dict:
    """Frame constraints and orthogonality over the fixed grid (both branches)."""
    ck = _Checks()
    tol = 1e-12
    grid = frame_grid()
    for psi, ps, sigma, ss in grid:
        for branch in (1, -1):
            cfg = MotionConfig(DualScalar(sigma, ss), branch)
            pose = frame_at(cfg, DualScalar(psi, ps))
            res = verify_frame_constraints(pose, cfg)
            ck.add("unit_norm", abs(res.unit_norm), tol)
            ck.add("orthogonal_to_v3", abs(res.v3_orthogonal), tol)
            ck.add("plane_through_c", abs(res.c_plane), tol)
            ck.add("coplanarity_det", abs(res.coplanarity), tol)
            ck.add("orthonormality", orthonormality_residual(pose), tol)
            ck.add("v2_is_v1_cross_v3", _vdev(pose.v2, dl_cross(pose.v1, pose.v3)), tol)
            ck.add("matrix_orthogonality", orthogonality_residual(frame_matrix(pose)), tol)
            ck.add("c_on_H2", abs(dl_inner(c_axis(cfg), c_axis(cfg)).re + 1.0), tol)
    return ck.result("frame", len(grid) * 2)


def _rand_timelike(r: SplitMix64) -> Vec3L:
    x, y = r.uniform(-2, 2), r.uniform(-2, 2)
    z = math.sqrt(x * x + y * y + r.uniform(0.25, 4.0))
    return Vec3L(x, y, -z if r.next_u64() & 1 else z)


def suite_study(samples: int = 1000, seed: int = 42) -> dict:
    """Study map round trip, collinearity, moment recovery and invariance."""
    r = stream(seed, "study")
    ck = _Checks()
    tol = 1e-12
    for _ in range(samples):
        m = Vec3L(r.uniform(-2, 2), r.uniform(-2, 2), r.uniform(-2, 2))
        direction = _rand_timelike(r)
        lam0, lam1 = r.uniform(-2, 2), r.uniform(-2, 2)
        line = line_from_point_direction(m, direction)
        back = dual_to_line(line_to_dual(line))
        scale = max(1.0, euclid_norm(m), abs(lam0), abs(lam1)) * max(1.0, euclid_norm(line.direction)) ** 2
        ck.add("round_trip", max(euclid_norm(back.direction - line.direction),
                                 euclid_norm(back.moment - line.moment)) / scale, tol)
        a = line_to_dual(line)
        y0 = point_at(a, lam0)
        y1 = point_at(a, lam1)
        ck.add("collinearity", euclid_norm(l_cross(y1 - y0, line.direction)) / scale ** 2, tol)
        rec = line_from_point_direction(y1, line.direction)
        ck.add("moment_recovery", euclid_norm(rec.moment - line.moment) / scale, tol)
        shifted = line_from_point_direction(m + direction * r.uniform(-2, 2), direction)
        ck.add("moment_invariance", euclid_norm(shifted.moment - line.moment) / scale ** 2, tol)
    return ck.result("study", samples, seed=seed)


def suite_orbit(samples: int = 1000, seed: int = 42) -> dict:
    """Orbit point pseudo-norm identity and the P = 0 / Q = 0 reductions."""
    r = stream(seed, "orbit")
    ck = _Checks()
    tol = 1e-12
    done = 0
    while done < samples:
        psi = DualScalar(r.uniform(-2, 2), r.uniform(-1, 1))
        delta = DualScalar(r.signed_band(0.1, 1.5), r.uniform(-1, 1))
        P = DualScalar(r.uniform(-1.5, 1.5), r.uniform(-1, 1))
        Q = DualScalar(r.uniform(-1.5, 1.5), r.uniform(-1, 1))
        if abs(P.re + Q.re) < 0.05:
            continue
        done += 1
        pose = frame_at(MotionConfig(delta), psi)
        spec = OrbitSpec.from_angles(P, Q)
        x = orbit_point(pose, spec)
        lhs = dl_inner(x, x) * d.sinh(P + Q)
        rhs = d.sinh(P - Q)
        scale = max(1.0, abs(rhs), abs(dl_inner(x, x)) * abs(d.sinh(P + Q)))
        ck.add("pseudo_norm_identity", _dev(lhs, rhs, scale), tol)
        # a * sinh(Q) = 1 + ε0 only to rounding; its dual part cancels terms of
        # size |sinh(Q)* / sinh(Q)|, which sets the attainable accuracy
        sq, sp = d.sinh(Q), d.sinh(P)
        x3 = orbit_point(pose, OrbitSpec.from_angles(d.ZERO, Q))
        cond3 = max(1.0, pose.v3.max_abs()) * (1.0 + abs(sq.du / sq.re))
        ck.add("P0_gives_v3", _vdev(x3, pose.v3) / cond3, tol)
        x1 = orbit_point(pose, OrbitSpec.from_angles(P, d.ZERO))
        cond1 = max(1.0, pose.v1.max_abs()) * (1.0 + abs(sp.du / sp.re))
        ck.add("Q0_gives_v1", _vdev(x1, pose.v1) / cond1, tol)
    return ck.result("orbit", samples, seed=seed)


def suite_v3_hyperbola(samples: int = 0, seed: int = 42) -> dict:
    """v3 orbit: y3^2 - y2^2 = lam^2 and y1 = psi* on a 21 x 5 x 5 grid."""
    ck = _Checks()
    total = 0
    for sigma, ss in ((0.8, 0.3), (-1.2, -0.7)):
        grid = GridSpec(AxisRange(-2, 2, 21), AxisRange(-1, 1, 5), AxisRange(-2, 2, 5),
                        CaseParams(sigma=sigma, sigma_star=ss))
        sset = sample_congruence("v3_case", grid)
        ck.add("skipped", float(len(sset.skipped)), 0.0)
        for s in sset.samples:
            hyp, plane = residual_v3_hyperbola(s.point, s.ruling, s.psi_star)
            ck.add("hyperbola", abs(hyp), 1e-12)
            ck.add("plane_y1_psi_star", abs(plane), 1e-12)
        total += len(sset)
    return ck.result("v3_hyperbola", total)


def v1_surface_grid(sigma_star: float) -> GridSpec:
    return GridSpec(AxisRange(0.2, 2.0, 19), AxisRange(-1, 1, 5), AxisRange(-2, 2, 9),
                    CaseParams(sigma=0.0, sigma_star=sigma_star))


def suite_v1_surface(samples: int = 0, seed: int = 42, tol: float = 1e-9) -> dict:
    """v1 orbit at sigma = 0: the ruled surface relation and y1 = psi*."""
    ck = _Checks()
    total = 0
    for ss in (0.1, 0.3, 1.0):
        sset = sample_congruence("v1_case", v1_surface_grid(ss))
        ck.add("skipped", float(len(sset.skipped)), 0.0)
        for s in sset.samples:
            ck.add("surface_relation", abs(residual_v1_surface(s.point, s.psi, s.ruling)), tol)
            ck.add("plane_y1_psi_star", abs(s.point.c1 - s.psi_star), tol)
        total += len(sset)
    return ck.result("v1_surface", total)


def suite_helicoid(samples: int = 0, seed: int = 42, tol: float = 1e-9) -> dict:
    """v2 orbit at sigma = 0 with u = k psi: the Lorentzian helicoid relation."""
    ck = _Checks()
    total = 0
    psis = [0.2 + 0.1 * i for i in range(19)]
    for k in (0.5, 1.0, 2.0):
        for ss in (-1.0, -0.3, 0.3, 1.0):
            for ps in (-1.0, 0.0, 1.0):
                fixed = CaseParams(sigma=0.0, sigma_star=ss)
                for psi in psis:
                    u = k * psi
                    g = congruence_point("v2_case", fixed, psi, ps, u)
                    ck.add("helicoid_relation", abs(residual_helicoid(g, k, "sigma0")), tol)
                    printed = g_sigma0_printed(fixed.replace(psi=psi, psi_star=ps, u=u))
                    ck.add("matches_printed_special_form",
                           max(abs(x - y) for x, y in zip(g, printed)), tol)
                    total += 1
    return ck.result("helicoid", total)


def suite_reconcile(samples: int = 1000, seed: int = 42, tol: float = 1e-9) -> dict:
    """Run every transcription and compare its verdict with the committed ledger."""
    reports = reconcile_all(samples, seed, tol)
    ledger = load_expected_verdicts()["verdicts"]
    diffs = {r.formula: {"got": r.verdict, "expected": ledger.get(r.formula)}
             for r in reports if ledger.get(r.formula) != r.verdict}
    missing = sorted(set(ledger) - {r.formula for r in reports})
    consistency = {r.formula: r.verdict for r in reports if r.formula in CONSISTENCY}
    return {
        "suite": "reconcile",
        "passed": not diffs and not missing,
        "samples": samples,
        "seed": seed,
        "tol": tol,
        "ledger_differences": diffs,
        "ledger_missing": missing,
        "consistency_cluster": consistency,
        "consistency_all_match": all(v == "MATCH" for v in consistency.values()),
        "reports": [r.to_dict() for r in reports],
    }


def run_suite(name: str, samples: int = 1000, seed: int = 42, tol: float = 1e-9) -> dict:
    if name == "dual":
        return suite_dual(samples, seed)
    if name == "identities":
        return suite_identities(samples, seed)
    if name == "frame":
        return suite_frame()
    if name == "study":
        return suite_study(samples, seed)
    if name == "orbit":
        return suite_orbit(samples, seed)
    if name == "v1_surface":
        return suite_v1_surface(tol=tol)
    if name == "v3_hyperbola":
        return suite_v3_hyperbola()
    if name == "helicoid":
        return suite_helicoid(tol=tol)
    if name == "reconcile":
        return suite_reconcile(samples, seed, tol)
    raise ValueError(f"unknown suite {name!r}")
