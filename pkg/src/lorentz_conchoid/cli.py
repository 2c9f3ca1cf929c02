"""Command line front end: ``frame``, ``orbit``, ``surface`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 invalid flags or config,
3 degenerate configuration, 4 incomplete slice for mesh output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import dual as d
from .dual import DualScalar
from .dual_lorentz import causal_class, dl_inner, is_dual_lorentz_orthogonal
from .errors import DegenerateConfiguration, IncompleteSlice
from .export import sample_set_to_dict, write_csv, write_json, write_obj
from .motion import (MotionConfig, OrbitSpec, frame_at, frame_matrix, orbit_point,
                     orthonormality_residual, verify_frame_constraints)
from .printed_forms import CaseParams
from .sampler import AxisRange, GridSpec, sample_congruence, to_mesh
from .suites import SUITES, run_suite

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_INCOMPLETE = 4

CASES = {
    # case: (generator, force sigma = 0, first axis sweeps sigma)
    "general": ("general", False, False),
    "v1": ("v1_case", False, False),
    "v1-sigma0": ("v1_case", True, False),
    "v3": ("v3_case", False, False),
    "v2": ("v2_case", False, False),
    "v2-sigma0": ("v2_case", True, False),
    "v2-psi0": ("v2_case", False, True),
}

DEFAULTS = {
    "frame": {"psi_star": 0.0, "sigma_star": 0.0, "branch": 1, "format": "text"},
    "orbit": {"psi_star": 0.0, "sigma_star": 0.0, "p_star": 0.0, "q_star": 0.0,
              "branch": 1, "format": "text"},
    # nonzero sigma keeps the psi = 0 cells regular unless a sigma0 case is chosen
    "surface": {"sigma": 0.8, "sigma_star": 0.0, "p": 0.0, "p_star": 0.0, "q": 0.0,
                "q_star": 0.0, "branch": 1, "psi_range": "0.2:2:10",
                "psi_star_range": "0:0:1", "ruling_range": "-2:2:9", "sweep_axis": "ruling"},
    "verify": {"suite": "all", "samples": 1000, "seed": 42, "tol": 1e-9},
}
REQUIRED = {
    "frame": ("psi", "sigma"),
    "orbit": ("psi", "sigma", "p", "q"),
    "surface": ("case", "out"),
    "verify": (),
}


class UsageError(Exception):
    pass


def finite_float(text) -> float:
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return value


def axis_range(text) -> str:
    try:
        AxisRange.parse(str(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return str(text)


def branch(text) -> int:
    try:
        value = int(text)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"branch must be 1 or -1, got {text!r}")
    if value not in (1, -1):
        raise argparse.ArgumentTypeError(f"branch must be 1 or -1, got {text!r}")
    return value


def positive_int(text) -> int:
    try:
        value = int(text)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return value


def positive_float(text) -> float:
    value = finite_float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0: {text!r}")
    return value


def _choice(options):
    def conv(text):
        if text not in options:
            raise argparse.ArgumentTypeError(f"choose from {', '.join(options)}")
        return text
    return conv


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lorentz-conchoid",
        description="Dual hyperbolic conchoidal motion and its Study-map line congruences.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON file of flag values (explicit flags win)")

    def angles(p):
        p.add_argument("--psi", type=finite_float)
        p.add_argument("--psi-star", type=finite_float)
        p.add_argument("--sigma", type=finite_float)
        p.add_argument("--sigma-star", type=finite_float)
        p.add_argument("--branch", type=branch, help="sign branch of v1 (1 or -1)")

    fmt = _choice(("text", "json"))

    p = sub.add_parser("frame", help="evaluate the moving frame and its constraint residuals")
    common(p)
    angles(p)
    p.add_argument("--format", type=fmt)

    p = sub.add_parser("orbit", help="evaluate an orbit point a(v1 sinh P + v3 sinh Q)")
    common(p)
    angles(p)
    for name in ("--p", "--p-star", "--q", "--q-star"):
        p.add_argument(name, type=finite_float)
    p.add_argument("--format", type=fmt)

    p = sub.add_parser("surface", help="sample a congruence and write CSV, OBJ or JSON")
    common(p)
    p.add_argument("--case", type=_choice(tuple(CASES)))
    p.add_argument("--sigma", type=finite_float)
    p.add_argument("--sigma-star", type=finite_float)
    for name in ("--p", "--p-star", "--q", "--q-star"):
        p.add_argument(name, type=finite_float)
    p.add_argument("--branch", type=branch)
    p.add_argument("--psi-range", type=axis_range, help="lo:hi:n (sigma range for v2-psi0)")
    p.add_argument("--psi-star-range", type=axis_range, help="lo:hi:n")
    p.add_argument("--ruling-range", type=axis_range, help="lo:hi:n for lambda or u")
    p.add_argument("--sweep-axis", type=_choice(("psi", "ruling")))
    p.add_argument("--out", help="output path ending in .csv, .obj or .json")

    p = sub.add_parser("verify", help="run verification suites and print a JSON report")
    common(p)
    p.add_argument("--suite", type=_choice(SUITES + ("all",)))
    p.add_argument("--samples", type=positive_int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=positive_float)
    p.add_argument("--out", help="also write the report to this path")
    return parser


def _merge_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> argparse.Namespace:
    cmd = args.command
    sub = next(a for a in parser._subparsers._group_actions[0].choices.items() if a[0] == cmd)[1]
    actions = {a.dest: a for a in sub._actions if a.dest not in ("help", "config")}
    config = {}
    if args.config:
        try:
            config = json.loads(Path(args.config).read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}")
        if not isinstance(config, dict):
            raise UsageError("config must be a JSON object")
    for key, value in config.items():
        dest = key.replace("-", "_")
        if dest not in actions:
            raise UsageError(f"unknown config key {key!r} for {cmd}")
        if getattr(args, dest) is not None:
            continue
        conv = actions[dest].type
        try:
            setattr(args, dest, conv(value) if conv else value)
        except argparse.ArgumentTypeError as exc:
            raise UsageError(f"config {key}: {exc}")
    for dest, value in DEFAULTS[cmd].items():
        if getattr(args, dest, None) is None:
            setattr(args, dest, value)
    missing = [k for k in REQUIRED[cmd] if getattr(args, k, None) is None]
    if missing:
        raise UsageError("missing required: " + ", ".join("--" + m.replace("_", "-") for m in missing))
    return args


def _pair(x: DualScalar) -> list[float]:
    return [x.re, x.du]


def _dvec(v) -> dict:
    return {"re": v.re.to_list(), "du": v.du.to_list()}


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _text_vec(name: str, v) -> str:
    re = " ".join(f"{_fmt(c):>24}" for c in v.re)
    du = " ".join(f"{_fmt(c):>24}" for c in v.du)
    return f"{name:<4} re {re}\n{'':<4} du {du}"


def _emit(report: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def cmd_frame(args) -> int:
    cfg = MotionConfig(DualScalar(args.sigma, args.sigma_star), args.branch)
    pose = frame_at(cfg, DualScalar(args.psi, args.psi_star))
    res = verify_frame_constraints(pose, cfg)
    ortho = orthonormality_residual(pose)
    matrix_ok = is_dual_lorentz_orthogonal(frame_matrix(pose), 1e-12)
    report = {
        "psi": _pair(pose.psi), "delta": _pair(cfg.delta), "branch": cfg.lambda_sign,
        "A": _pair(pose.A),
        "v1": _dvec(pose.v1), "v2": _dvec(pose.v2), "v3": _dvec(pose.v3),
        "residuals": res.to_dict(),
        "orthonormality_residual": ortho,
        "dual_lorentz_orthogonal": matrix_ok,
    }
    lines = [
        f"psi   {_fmt(pose.psi.re)} + ε {_fmt(pose.psi.du)}",
        f"delta {_fmt(cfg.delta.re)} + ε {_fmt(cfg.delta.du)}   branch {cfg.lambda_sign:+d}",
        f"A     {_fmt(pose.A.re)} + ε {_fmt(pose.A.du)}",
        _text_vec("v1", pose.v1), _text_vec("v2", pose.v2), _text_vec("v3", pose.v3),
        "residuals (re, du):",
    ]
    for key, (re, du) in res.to_dict().items():
        lines.append(f"  {key:<12} {_fmt(re):>24} {_fmt(du):>24}")
    lines.append(f"orthonormality residual {_fmt(ortho)}")
    lines.append(f"dual Lorentz orthogonal {'yes' if matrix_ok else 'no'}")
    _emit(report, "\n".join(lines) + "\n", args.format)
    return 0


def cmd_orbit(args) -> int:
    cfg = MotionConfig(DualScalar(args.sigma, args.sigma_star), args.branch)
    pose = frame_at(cfg, DualScalar(args.psi, args.psi_star))
    spec = OrbitSpec.from_angles(DualScalar(args.p, args.p_star), DualScalar(args.q, args.q_star))
    x = orbit_point(pose, spec)
    norm = dl_inner(x, x)
    resid = norm * d.sinh(spec.P + spec.Q) - d.sinh(spec.P - spec.Q)
    report = {
        "psi": _pair(pose.psi), "delta": _pair(cfg.delta), "branch": cfg.lambda_sign,
        "P": _pair(spec.P), "Q": _pair(spec.Q), "a": _pair(spec.a),
        "x": _dvec(x),
        "pseudo_norm": _pair(norm),
        "identity_residual": _pair(resid),
        "causal_class": causal_class(x).value,
        "p_plus_q_is_half_pi": spec.is_quarter_turn(),
    }
    text = "\n".join([
        f"P {_fmt(spec.P.re)} + ε {_fmt(spec.P.du)}   Q {_fmt(spec.Q.re)} + ε {_fmt(spec.Q.du)}",
        f"a {_fmt(spec.a.re)} + ε {_fmt(spec.a.du)}",
        _text_vec("x", x),
        f"<x,x>             {_fmt(norm.re)} + ε {_fmt(norm.du)}",
        f"identity residual {_fmt(resid.re)} + ε {_fmt(resid.du)}",
        f"causal class      {causal_class(x).value}",
        f"p + q = pi/2      {'yes' if spec.is_quarter_turn() else 'no'}",
    ]) + "\n"
    _emit(report, text, args.format)
    return 0


def cmd_surface(args) -> int:
    out = Path(args.out)
    ext = out.suffix.lower()
    if ext not in (".csv", ".obj", ".json"):
        raise UsageError(f"unknown output extension {out.suffix!r} (use .csv, .obj or .json)")
    generator, sigma0, sweep_sigma = CASES[args.case]
    fixed = CaseParams(sigma=0.0 if sigma0 else args.sigma, sigma_star=args.sigma_star,
                       p=args.p, p_star=args.p_star, q=args.q, q_star=args.q_star)
    grid = GridSpec(AxisRange.parse(args.psi_range), AxisRange.parse(args.psi_star_range),
                    AxisRange.parse(args.ruling_range), fixed, args.branch,
                    "sigma" if sweep_sigma else "psi")
    samples = sample_congruence(generator, grid)
    out.parent.mkdir(parents=True, exist_ok=True)
    if ext == ".obj":
        try:
            mesh = to_mesh(samples, args.sweep_axis)
        except ValueError as exc:
            raise UsageError(str(exc))
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            write_obj(mesh, samples, fh)
        extra = f", {len(mesh.faces)} faces"
    elif ext == ".csv":
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            write_csv(samples, fh)
        extra = ""
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            write_json(sample_set_to_dict(samples), fh)
        extra = ""
    print(f"{args.case}: {len(samples)} samples, {len(samples.skipped)} skipped{extra} -> {out}")
    return 0


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    results = [run_suite(n, args.samples, args.seed, args.tol) for n in names]
    report = {"passed": all(r["passed"] for r in results), "suites": results}
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    return 0 if report["passed"] else EXIT_FAIL


COMMANDS = {"frame": cmd_frame, "orbit": cmd_orbit, "surface": cmd_surface, "verify": cmd_verify}


RANGE_FLAGS = ("--psi-range", "--psi-star-range", "--ruling-range")


def _attach_range_values(argv: list[str]) -> list[str]:
    # argparse reads "-1:1:21" as an option; glue it to its flag
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in RANGE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_range_values(argv))
    try:
        args = _merge_config(args, parser)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IncompleteSlice as exc:
        print(f"incomplete slice: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except DegenerateConfiguration as exc:
        print(f"degenerate configuration: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
