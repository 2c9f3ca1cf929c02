"""Grid sampling of the orbit congruences through the canonical path.

Every point is produced as frame -> designated dual vector -> Study point,
never from the transcribed expansions, so exported geometry does not
inherit their typos.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

from .dual import DualScalar
from .errors import ConchoidError, IncompleteSlice, OutOfDomain
from .minkowski import Vec3L, euclid_norm, l_cross
from .motion import MotionConfig, OrbitSpec, frame_at, orbit_point
from .printed_forms import CaseParams
from .study import ruling_point

GENERATORS = ("general", "v1_case", "v3_case", "v2_case")
THREADS_ENV = "LORENTZ_CONCHOID_THREADS"
MIN_FACE_AREA = 1e-14


@dataclass(frozen=True)
class AxisRange:
    lo: float
    hi: float
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("axis count must be at least 1")
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("axis bounds must be finite")

    @classmethod
    def parse(cls, text: str) -> AxisRange:
        """Parse ``lo:hi:n``; ``n = 1`` means the single value ``lo``."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range {text!r} is not lo:hi:n")
        return cls(float(parts[0]), float(parts[1]), int(parts[2]))

    def values(self) -> list[float]:
        if self.count == 1:
            return [self.lo]
        step = (self.hi - self.lo) / (self.count - 1)
        return [self.lo + i * step for i in range(self.count - 1)] + [self.hi]

    def __str__(self) -> str:
        return f"{self.lo!r}:{self.hi!r}:{self.count}"


@dataclass(frozen=True)
class GridSpec:
    """Axes of a congruence grid; ``fixed`` supplies the non-varying symbols.

    With ``first_axis="sigma"`` the first axis sweeps sigma instead of psi
    (psi is then ``fixed.psi``); this is how the psi = 0 case is sampled.
    """

    psi_range: AxisRange
    psi_star_range: AxisRange
    ruling_range: AxisRange
    fixed: CaseParams = CaseParams()
    lambda_sign: int = 1
    first_axis: Literal["psi", "sigma"] = "psi"

    def axes(self) -> tuple[AxisRange, AxisRange, AxisRange]:
        return self.psi_range, self.psi_star_range, self.ruling_range

    def summary(self) -> str:
        f = self.fixed
        return (f"{self.first_axis}={self.psi_range} psi_star={self.psi_star_range} "
                f"ruling={self.ruling_range} sigma={f.sigma!r} sigma_star={f.sigma_star!r} "
                f"p={f.p!r} p_star={f.p_star!r} q={f.q!r} q_star={f.q_star!r} "
                f"branch={self.lambda_sign}")


@dataclass(frozen=True)
class Sample:
    psi: float
    psi_star: float
    ruling: float
    point: Vec3L


@dataclass
class SampleSet:
    generator: str
    grid: GridSpec
    samples: list[Sample] = field(default_factory=list)
    skipped: list[tuple[int, int, int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.samples)


@dataclass
class Mesh:
    vertices: list[Vec3L]
    faces: list[tuple[int, int, int]]


def congruence_point(generator: str, fixed: CaseParams, psi: float, psi_star: float,
                     ruling: float, sigma: float | None = None, lambda_sign: int = 1) -> Vec3L:
    """Canonical point of one congruence cell.

    ``general`` uses the orbit point ``a (v1 sinh P + v3 sinh Q)`` with P, Q
    from ``fixed``; ``v1_case``/``v3_case`` are its Q = 0 / P = 0
    specializations (the orbit point is then exactly ``v1`` / ``v3``);
    ``v2_case`` follows ``v2``.
    """
    if sigma is None:
        sigma = fixed.sigma
    cfg = MotionConfig(DualScalar(sigma, fixed.sigma_star), lambda_sign)
    pose = frame_at(cfg, DualScalar(psi, psi_star))
    if generator == "general":
        spec = OrbitSpec.from_angles(DualScalar(fixed.p, fixed.p_star),
                                     DualScalar(fixed.q, fixed.q_star))
        x = orbit_point(pose, spec)
    elif generator == "v1_case":
        x = pose.v1
    elif generator == "v3_case":
        x = pose.v3
    elif generator == "v2_case":
        x = pose.v2
    else:
        raise ValueError(f"unknown generator {generator!r}")
    return ruling_point(x, ruling)


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    n = int(raw) if raw else 0
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0")
    return n if n > 0 else min(4, os.cpu_count() or 1)


def sample_congruence(generator: str, grid: GridSpec) -> SampleSet:
    """Evaluate every grid cell, row-major over (first axis, psi*, ruling).

    Cells that raise a configuration error are skipped and recorded.
    """
    if generator not in GENERATORS:
        raise ValueError(f"unknown generator {generator!r}")
    first, stars, rulings = (ax.values() for ax in grid.axes())

    def row(i: int):
        out = []
        for j, ps in enumerate(stars):
            for k, lam in enumerate(rulings):
                if grid.first_axis == "sigma":
                    psi, sigma = grid.fixed.psi, first[i]
                else:
                    psi, sigma = first[i], grid.fixed.sigma
                try:
                    pt = congruence_point(generator, grid.fixed, psi, ps, lam,
                                          sigma=sigma, lambda_sign=grid.lambda_sign)
                except ConchoidError:
                    out.append(((i, j, k), None))
                    continue
                out.append(((i, j, k), Sample(first[i], ps, lam, pt)))
        return out

    workers = worker_count()
    if workers > 1 and len(first) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, range(len(first))))
    else:
        rows = [row(i) for i in range(len(first))]

    result = SampleSet(generator, grid)
    for cells in rows:
        for idx, sample in cells:
            if sample is None:
                result.skipped.append(idx)
            else:
                result.samples.append(sample)
    return result


def residual_v1_surface(y: Vec3L, psi: float, lam: float) -> float:
    """``cosh^2 psi (y2 + lam / cosh psi)^2 - y3^2 sinh^2 psi``."""
    C = math.cosh(psi)
    S = math.sinh(psi)
    return C * C * (y.c2 + lam / C) ** 2 - y.c3 * y.c3 * S * S


def residual_v3_hyperbola(y: Vec3L, lam: float, psi_star: float) -> tuple[float, float]:
    """``(y3^2 - y2^2 - lam^2, y1 - psi*)``."""
    return y.c3 * y.c3 - y.c2 * y.c2 - lam * lam, y.c1 - psi_star


def residual_helicoid(g: Vec3L, k: float, variant: Literal["sigma0", "psi0"]) -> float:
    """Lorentzian helicoid relation.

    ``sigma0``: ``g1 - k atanh(g2 / g3)``; ``psi0``: ``g2 - k atanh(g3 / g1)``.
    """
    if variant == "sigma0":
        num, den, lhs = g.c2, g.c3, g.c1
    elif variant == "psi0":
        num, den, lhs = g.c3, g.c1, g.c2
    else:
        raise ValueError(f"unknown helicoid variant {variant!r}")
    if den == 0.0:
        raise OutOfDomain("helicoid ratio has a zero denominator")
    ratio = num / den
    if abs(ratio) >= 1.0:
        raise OutOfDomain(f"atanh argument {ratio!r} outside (-1, 1)")
    return lhs - k * math.atanh(ratio)


def _area(a: Vec3L, b: Vec3L, c: Vec3L) -> float:
    # Euclidean area in file coordinates; l_cross differs from the Euclidean
    # cross product only by the sign of the first two components
    n = l_cross(b - a, c - a)
    return 0.5 * euclid_norm(n)


def to_mesh(samples: SampleSet, sweep_axis: Literal["psi", "ruling"] = "ruling") -> Mesh:
    """Triangulate a complete 2D slice of a sample set.

    Exactly two grid axes must have more than one value. Vertices keep the
    sample (row-major) order; each quad is split into two triangles whose
    shared diagonal follows ``sweep_axis``. Triangles of area at most
    ``MIN_FACE_AREA`` are dropped.
    """
    if samples.skipped:
        raise IncompleteSlice(f"{len(samples.skipped)} skipped cells break the slice")
    names = ("psi", "psi_star", "ruling")
    counts = [ax.count for ax in samples.grid.axes()]
    varying = [n for n, c in zip(names, counts) if c > 1]
    if len(varying) != 2:
        raise ValueError(f"a 2D slice needs exactly two varying axes, got {varying}")
    if sweep_axis not in varying:
        raise ValueError(f"sweep axis {sweep_axis!r} does not vary in this slice")
    rows = counts[names.index(varying[0])]
    cols = counts[names.index(varying[1])]
    verts = [s.point for s in samples.samples]
    sweep_inner = sweep_axis == varying[1]
    faces = []
    for i in range(rows - 1):
        for j in range(cols - 1):
            v00 = i * cols + j
            v01 = v00 + 1
            v10 = v00 + cols
            v11 = v10 + 1
            if sweep_inner:
                tris = ((v00, v10, v11), (v00, v11, v01))
            else:
                tris = ((v00, v10, v01), (v01, v10, v11))
            for t in tris:
                if _area(verts[t[0]], verts[t[1]], verts[t[2]]) > MIN_FACE_AREA:
                    faces.append(t)
    return Mesh(verts, faces)
