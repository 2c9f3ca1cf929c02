"""CSV, OBJ and JSON writers for sample sets, meshes and reports.

File axes (x, y, z) carry (y1, y2, y3); z is the timelike coordinate.
"""

from __future__ import annotations

import json
from typing import TextIO

from .sampler import Mesh, SampleSet

CSV_HEADER = "psi,psi_star,ruling,y1,y2,y3"
CSV_HEADER_SIGMA = "sigma,psi_star,ruling,y1,y2,y3"


def _g(x: float) -> str:
    return f"{x:.17g}"


def write_csv(samples: SampleSet, fh: TextIO) -> None:
    # the first column holds sigma when the grid sweeps sigma at fixed psi
    fh.write((CSV_HEADER_SIGMA if samples.grid.first_axis == "sigma" else CSV_HEADER) + "\n")
    for s in samples.samples:
        row = (s.psi, s.psi_star, s.ruling, s.point.c1, s.point.c2, s.point.c3)
        fh.write(",".join(_g(v) for v in row) + "\n")


def write_obj(mesh: Mesh, samples: SampleSet, fh: TextIO) -> None:
    fh.write("# lorentz-conchoid\n")
    fh.write(f"# generator={samples.generator} {samples.grid.summary()}\n")
    fh.write("# axes: x=y1 y=y2 z=y3 (z is the timelike coordinate)\n")
    for v in mesh.vertices:
        fh.write(f"v {_g(v.c1)} {_g(v.c2)} {_g(v.c3)}\n")
    for a, b, c in mesh.faces:
        fh.write(f"f {a + 1} {b + 1} {c + 1}\n")


def sample_set_to_dict(samples: SampleSet) -> dict:
    g = samples.grid
    return {
        "generator": samples.generator,
        "grid": {
            "first_axis": g.first_axis,
            "psi_range": [g.psi_range.lo, g.psi_range.hi, g.psi_range.count],
            "psi_star_range": [g.psi_star_range.lo, g.psi_star_range.hi, g.psi_star_range.count],
            "ruling_range": [g.ruling_range.lo, g.ruling_range.hi, g.ruling_range.count],
            "fixed": {k: getattr(g.fixed, k) for k in ("sigma", "sigma_star", "p", "p_star", "q", "q_star")},
            "lambda_sign": g.lambda_sign,
        },
        "coordinates": "x=y1 y=y2 z=y3 (z timelike)",
        "skipped": len(samples.skipped),
        "samples": [
            {"psi": s.psi, "psi_star": s.psi_star, "ruling": s.ruling, "point": s.point.to_list()}
            for s in samples.samples
        ],
    }


def write_json(obj: dict, fh: TextIO) -> None:
    json.dump(obj, fh, indent=2)
    fh.write("\n")
