"""Command-line interface: frame tables, offset verification, meshes, study map.

Subcommands:

    frames       CSV of frame samples and invariants for a surface spec
    offset       Mannheim offset verification -> JSON report + CSV table
    mesh         Wavefront OBJ of the ruled surface (optionally its offset)
    reconstruct  integrate a (gamma, delta, Delta) profile back to a surface
    study        line <-> dual unit vector conversion

Exit codes: 0 success, 2 spec error, 3 degeneracy, 4 tolerance failure,
5 I/O error.  All file formats are plain JSON/CSV/OBJ; numbers are written
at full round-trip precision (9 significant digits in OBJ).
"""

from __future__ import annotations

import argparse
import ast
import csv
import json
import sys

import numpy as np

from . import dual as dualmod
from .dual import DualVec3
from .errors import (DegenerateIndicatrix, DegenerateOffset, FrameDegeneracy, GeometryError,
                     InvalidDirection, NonFinite, NotUnit, NullDarboux, SpecFileError,
                     StepSizeError, ZeroConicalCurvature)
from .lorentz import Vec3L
from .numerics import CENTRAL_FD, DUAL_AD, SIMPSON, TRAPEZOID, NumericsConfig
from .ruled import (SPACELIKE_SURFACE, TIMELIKE_SURFACE, InvariantProfile, RuledSurfaceSpec,
                    arclength_reparametrize, darboux_frame, dual_curvature_elements,
                    reconstruct_from_invariants, striction_curve, timelike_invariants,
                    timelike_radius)
from .mannheim import MannheimParams, construct_offset, offset_angles, verify_offset
from .lines import OrientedLine, dual_to_line, line_to_dual
from . import catalog

EXIT_OK = 0
EXIT_SPEC = 2
EXIT_DEGENERACY = 3
EXIT_TOLERANCE = 4
EXIT_IO = 5

_DEGENERACY_ERRORS = (DegenerateIndicatrix, DegenerateOffset, FrameDegeneracy,
                      NullDarboux, StepSizeError, ZeroConicalCurvature)

FRAMES_HEADER = ["s", "e1", "e2", "e3", "t1", "t2", "t3", "g1", "g2", "g3",
                 "gamma", "delta", "Delta", "s_star", "gamma_dual_re", "gamma_dual_du",
                 "R_re", "R_du"]

OFFSET_QUANTITIES = ["ds1_ds", "Delta1", "delta1", "gamma1",
                     "gamma1_dual_re", "gamma1_dual_du", "R1_re", "R1_du"]


# ---------------------------------------------------------------------------
# expression grammar: +, -, *, / and sinh, cosh, sin, cos, exp over one variable

_EXPR_FUNCS = {"sinh": dualmod.sinh, "cosh": dualmod.cosh,
               "sin": dualmod.sin, "cos": dualmod.cos, "exp": dualmod.exp}

_EXPR_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div)
_EXPR_UNARY = (ast.UAdd, ast.USub)


def _validate_expr(node: ast.AST, source: str) -> None:
    if isinstance(node, ast.Expression):
        return _validate_expr(node.body, source)
    if isinstance(node, ast.BinOp) and isinstance(node.op, _EXPR_BINOPS):
        _validate_expr(node.left, source)
        _validate_expr(node.right, source)
        return
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, _EXPR_UNARY):
        return _validate_expr(node.operand, source)
    if isinstance(node, ast.Call):
        if (not isinstance(node.func, ast.Name) or node.func.id not in _EXPR_FUNCS
                or node.keywords or len(node.args) != 1):
            raise SpecFileError(f"only {sorted(_EXPR_FUNCS)} calls allowed in {source!r}")
        return _validate_expr(node.args[0], source)
    if isinstance(node, ast.Name):
        if node.id != "u":
            raise SpecFileError(f"unknown name {node.id!r} in {source!r} (the variable is 'u')")
        return
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        return
    raise SpecFileError(f"unsupported syntax {ast.dump(node)} in {source!r}")


def compile_scalar_expr(source: str):
    """Compile an expression string of ``u`` into a dual-capable callable."""
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise SpecFileError(f"cannot parse expression {source!r}: {exc}") from None
    _validate_expr(tree, source)
    code = compile(tree, "<expr>", "eval")
    env = {"__builtins__": {}}
    env.update(_EXPR_FUNCS)

    def f(u):
        return eval(code, env, {"u": u})  # noqa: S307 - AST whitelisted above

    return f


def compile_curve_expr(components) -> object:
    if not (isinstance(components, (list, tuple)) and len(components) == 3):
        raise SpecFileError("a curve needs exactly 3 component expressions")
    fx, fy, fz = (compile_scalar_expr(str(c)) for c in components)

    def curve(u):
        return Vec3L(fx(u), fy(u), fz(u))

    return curve


# ---------------------------------------------------------------------------
# spec file ingestion

def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SpecFileError(message)


def load_surface_spec(path: str, samples_override: int | None = None) -> RuledSurfaceSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON in {path}: {exc}") from None
    _require(isinstance(data, dict), "surface spec must be a JSON object")

    dom = data.get("domain", {})
    _require(isinstance(dom, dict), "'domain' must be an object")
    s_min = float(dom.get("s_min", 0.0))
    s_max = float(dom.get("s_max", 1.0))
    samples = int(samples_override or dom.get("samples", 101))
    _require(s_min < s_max, f"domain needs s_min < s_max, got [{s_min}, {s_max}]")
    _require(samples >= 3, f"samples must be >= 3, got {samples}")

    kind = data.get("catalog", "custom")
    params = data.get("params", {})
    _require(isinstance(params, dict), "'params' must be an object")
    if kind in ("cone", "helicoidal"):
        a = float(params.get("a", 0.6))
        b = float(params.get("b", 0.8))
        _require(abs(a * a + b * b - 1.0) <= 1e-9, f"catalog needs a^2+b^2 = 1, got {a*a+b*b}")
        _require(b != 0.0, "catalog needs b != 0")
        c0 = Vec3L.from_iterable(params.get("c0", (0.0, 0.0, 0.0)))
        if kind == "cone":
            return catalog.cone(a, b, c0, (s_min, s_max), samples)
        return catalog.helicoidal(a, b, float(params.get("delta0", 0.2)),
                                  float(params.get("Delta0", 0.1)), c0,
                                  (s_min, s_max), samples)
    if kind == "custom":
        custom = data.get("custom", {})
        _require(isinstance(custom, dict) and "e" in custom and "c" in custom,
                 "custom spec needs 'custom': {'e': [...3 exprs], 'c': [...3 exprs]}")
        surface_kind = custom.get("kind", SPACELIKE_SURFACE)
        _require(surface_kind in (SPACELIKE_SURFACE, TIMELIKE_SURFACE),
                 f"unknown surface kind {surface_kind!r}")
        return RuledSurfaceSpec(
            indicatrix=compile_curve_expr(custom["e"]),
            base_curve=compile_curve_expr(custom["c"]),
            domain=(s_min, s_max),
            samples=samples,
            kind=surface_kind,
            name="custom",
        )
    raise SpecFileError(f"unknown catalog entry {kind!r}")


def _config_from_args(args) -> NumericsConfig:
    return NumericsConfig(
        quadrature=args.quadrature,
        derivative_mode=args.deriv,
        fd_step=args.fd_step,
        tolerance_theorem=args.tolerance,
    )


def _write_json(path: str, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
        fh.write("\n")


def _print_error(exc: Exception) -> None:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)


# ---------------------------------------------------------------------------
# commands

def _frame_table(spec, cfg):
    """Frame samples plus the kind-appropriate dual radius per sample."""
    if spec.kind == TIMELIKE_SURFACE:
        frames = timelike_invariants(spec, cfg)
        radii = [timelike_radius(f.gamma_dual).radius for f in frames]
    else:
        spec = arclength_reparametrize(spec, cfg)
        frames = darboux_frame(spec, cfg)
        radii = [dual_curvature_elements(f).R_dual for f in frames]
    return frames, radii


def cmd_frames(args) -> int:
    cfg = _config_from_args(args)
    spec = load_surface_spec(args.input, args.samples)
    frames, radii = _frame_table(spec, cfg)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(FRAMES_HEADER)
        for f, R in zip(frames, radii):
            writer.writerow([repr(float(x)) for x in (
                f.s, *f.e, *f.t, *f.g, f.gamma, f.delta, f.Delta, f.s_star,
                f.gamma_dual.re, f.gamma_dual.du, R.re, R.du)])
    return EXIT_OK


def _report_payload(report, spec, args) -> dict:
    rows = []
    for r in report.samples:
        rows.append({
            "s": r.s, "theta": r.theta, "theta_star": r.theta_star,
            "predicted": _record_payload(r.predicted),
            "measured": _record_payload(r.measured),
            "residuals": {k: float(v) for k, v in r.residuals.items()},
        })
    dev = report.developability
    return {
        "metadata": {
            "input": args.input,
            "mannheim": {"c": args.mannheim_c, "c_star": args.mannheim_cstar},
            "config": {
                "quadrature": args.quadrature, "derivative_mode": args.deriv,
                "fd_step": args.fd_step, "tolerance": report.tolerance,
            },
            "surface": {"name": spec.name, "kind": spec.kind,
                        "domain": list(spec.domain), "samples": spec.samples},
        },
        "samples": rows,
        "summary": {
            "max": {k: float(v) for k, v in report.residual_max.items()},
            "mean": {k: float(v) for k, v in report.residual_mean.items()},
        },
        "verdicts": {
            "passed": report.passed,
            "base_developable": dev.base_developable,
            "theta_star_constant": dev.theta_star_constant,
            "offset_developable_samples": [float(s) for s in dev.offset_developable_locus],
            "coth_singularities": [float(s) for s in dev.coth_singularities],
        },
    }


def _record_payload(rec) -> dict:
    return {
        "ds1_ds": float(rec.ds1_ds), "Delta1": float(rec.Delta1),
        "delta1": float(rec.delta1), "gamma1": float(rec.gamma1),
        "gamma1_dual": [float(rec.gamma1_dual.re), float(rec.gamma1_dual.du)],
        "R1": [float(rec.R1_dual.re), float(rec.R1_dual.du)],
    }


def _offset_out_paths(out: str) -> tuple[str, str]:
    if out.endswith(".json"):
        return out, out[:-5] + ".csv"
    return out + ".json", out + ".csv"


def cmd_offset(args) -> int:
    cfg = _config_from_args(args)
    spec = load_surface_spec(args.input, args.samples)
    _require(spec.kind == SPACELIKE_SURFACE,
             "offset verification needs a spacelike base surface")
    params = MannheimParams(args.mannheim_c, args.mannheim_cstar)
    report = verify_offset(spec, params, cfg)

    json_path, csv_path = _offset_out_paths(args.out)
    _write_json(json_path, _report_payload(report, spec, args))
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        header = ["s", "theta", "theta_star"]
        for key in OFFSET_QUANTITIES:
            header += [f"{key}_pred", f"{key}_meas"]
        writer.writerow(header)
        for r in report.samples:
            row = [r.s, r.theta, r.theta_star]
            for key in OFFSET_QUANTITIES:
                row += [_record_field(r.predicted, key), _record_field(r.measured, key)]
            writer.writerow([repr(float(x)) for x in row])
    return EXIT_OK if report.passed else EXIT_TOLERANCE


def _record_field(rec, key: str) -> float:
    if key == "gamma1_dual_re":
        return rec.gamma1_dual.re
    if key == "gamma1_dual_du":
        return rec.gamma1_dual.du
    if key == "R1_re":
        return rec.R1_dual.re
    if key == "R1_du":
        return rec.R1_dual.du
    return getattr(rec, key)


def cmd_mesh(args) -> int:
    cfg = _config_from_args(args)
    spec = load_surface_spec(args.input, args.samples)
    try:
        v_min, v_max = (float(x) for x in args.v_range.split(","))
    except ValueError:
        raise SpecFileError(f"--v-range expects 'v_min,v_max', got {args.v_range!r}") from None
    _require(v_min < v_max, f"mesh needs v_min < v_max, got [{v_min}, {v_max}]")
    _require(args.v_samples >= 2, "mesh needs v_samples >= 2")

    if spec.kind == SPACELIKE_SURFACE:
        spec = arclength_reparametrize(spec, cfg)
    meshes = [("base", striction_curve(spec, cfg), spec.indicatrix)]
    if args.offset:
        _require(spec.kind == SPACELIKE_SURFACE,
                 "--offset needs a spacelike base surface")
        frames = darboux_frame(spec, cfg)
        params = MannheimParams(args.mannheim_c, args.mannheim_cstar)
        angles = offset_angles(frames, params)
        off = construct_offset(spec, frames, angles, cfg)
        meshes.append(("offset", striction_curve(off, cfg), off.indicatrix))

    s_grid = [float(s) for s in spec.grid()]
    v_grid = [float(v) for v in np.linspace(v_min, v_max, args.v_samples)]
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(f"# dlgeom ruled surface mesh: {spec.name}\n")
        base_index = 1
        for name, c_curve, e_curve in meshes:
            fh.write(f"o {name}\n")
            for s in s_grid:
                c = c_curve(s)
                e = e_curve(s)
                for v in v_grid:
                    p = c + v * e
                    fh.write(f"v {p.x1:.9g} {p.x2:.9g} {p.x3:.9g}\n")
            nv = len(v_grid)
            for i in range(len(s_grid) - 1):
                for j in range(nv - 1):
                    k = base_index + i * nv + j
                    fh.write(f"f {k} {k + 1} {k + nv + 1} {k + nv}\n")
            base_index += len(s_grid) * nv
    return EXIT_OK


def _profile_fn(value, what: str):
    if isinstance(value, (int, float)):
        const = float(value)
        return lambda u: const
    if isinstance(value, str):
        return compile_scalar_expr(value)
    raise SpecFileError(f"profile entry {what!r} must be a number or expression string")


def load_profile(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON in {path}: {exc}") from None
    _require(isinstance(data, dict), "profile must be a JSON object")
    for key in ("gamma", "delta", "Delta"):
        _require(key in data, f"profile is missing {key!r}")
    frame = data.get("frame", {})
    _require(all(k in frame for k in ("e", "t", "g", "c")),
             "profile needs 'frame': {'e', 't', 'g', 'c'}")
    dom = data.get("domain", {})
    s_min = float(dom.get("s_min", 0.0))
    s_max = float(dom.get("s_max", 1.0))
    samples = int(dom.get("samples", 101))
    _require(s_min <= s_max, "profile domain needs s_min <= s_max")
    _require(samples >= 1, "profile needs samples >= 1")
    try:
        profile = InvariantProfile(
            gamma=_profile_fn(data["gamma"], "gamma"),
            delta=_profile_fn(data["delta"], "delta"),
            Delta=_profile_fn(data["Delta"], "Delta"),
            e0=Vec3L.from_iterable(frame["e"]),
            t0=Vec3L.from_iterable(frame["t"]),
            g0=Vec3L.from_iterable(frame["g"]),
            c0=Vec3L.from_iterable(frame["c"]),
        )
    except FrameDegeneracy as exc:
        raise SpecFileError(f"profile frame seed rejected: {exc}") from None
    if s_min == s_max:
        grid = np.array([s_min])
    else:
        grid = np.linspace(s_min, s_max, max(samples, 2))
    return profile, grid


def cmd_reconstruct(args) -> int:
    cfg = _config_from_args(args)
    profile, grid = load_profile(args.input)
    spec = reconstruct_from_invariants(profile, grid, cfg)
    if len(grid) == 1:
        f0 = _single_frame_row(profile, float(grid[0]), spec)
        frames = [f0]
    else:
        frames = darboux_frame(spec, cfg)

    json_path, csv_path = _offset_out_paths(args.out)
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(FRAMES_HEADER + ["c1", "c2", "c3"])
        for f in frames:
            R = dual_curvature_elements(f).R_dual
            writer.writerow([repr(float(x)) for x in (
                f.s, *f.e, *f.t, *f.g, f.gamma, f.delta, f.Delta, f.s_star,
                f.gamma_dual.re, f.gamma_dual.du, R.re, R.du, *f.striction_point)])

    residuals = {"gamma": [], "delta": [], "Delta": []}
    for f in frames:
        residuals["gamma"].append(abs(f.gamma - profile.gamma(f.s)))
        residuals["delta"].append(abs(f.delta - profile.delta(f.s)))
        residuals["Delta"].append(abs(f.Delta - profile.Delta(f.s)))
    payload = {
        "max": {k: max(v) for k, v in residuals.items()},
        "mean": {k: sum(v) / len(v) for k, v in residuals.items()},
        "samples": len(frames),
    }
    _write_json(json_path, payload)
    return EXIT_OK


def _single_frame_row(profile: InvariantProfile, s: float, spec: RuledSurfaceSpec):
    from .dual import DualScalar
    from .ruled import FrameSample
    gamma = profile.gamma(s)
    delta = profile.delta(s)
    Delta = profile.Delta(s)
    return FrameSample(
        s=s, e=profile.e0, t=profile.t0, g=profile.g0,
        gamma=gamma, delta=delta, Delta=Delta, s_star=0.0,
        gamma_dual=DualScalar(gamma, -(delta + gamma * Delta)),
        striction_point=profile.c0,
    )


def cmd_study(args) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON in {args.input}: {exc}") from None
    _require(isinstance(data, dict), "study input must be a JSON object")

    if args.direction == "line-to-dual" or ("point" in data and args.direction == "auto"):
        _require("point" in data and "dir" in data, "line input needs 'point' and 'dir'")
        line = OrientedLine(Vec3L.from_iterable(data["point"]),
                            Vec3L.from_iterable(data["dir"]))
        d = line_to_dual(line)
        back = line_to_dual(dual_to_line(d))
        ok = max(abs(x - y) for x, y in zip((*d.re, *d.du), (*back.re, *back.du))) <= 1e-9
        payload = {"a": list(d.re), "a_star": list(d.du), "round_trip_ok": ok}
    else:
        _require("a" in data and "a_star" in data, "dual input needs 'a' and 'a_star'")
        d = DualVec3(Vec3L.from_iterable(data["a"]), Vec3L.from_iterable(data["a_star"]))
        line = dual_to_line(d)
        back = line_to_dual(line)
        ok = max(abs(x - y) for x, y in zip((*d.re, *d.du), (*back.re, *back.du))) <= 1e-9
        payload = {"point": list(line.point), "dir": list(line.direction), "round_trip_ok": ok}

    if args.out:
        _write_json(args.out, payload)
    else:
        print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser / dispatch

def _add_numerics_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--samples", type=int, default=None, help="override sample count")
    p.add_argument("--quadrature", choices=[SIMPSON, TRAPEZOID], default=SIMPSON)
    p.add_argument("--deriv", choices=[DUAL_AD, CENTRAL_FD], default=DUAL_AD,
                   help="derivative mode")
    p.add_argument("--fd-step", type=float, default=1e-4, dest="fd_step")
    p.add_argument("--tolerance", type=float, default=None,
                   help="theorem tolerance (default 1e-8 dual-ad / 1e-6 central-fd)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlgeom",
        description="Dual Lorentzian ruled-surface kernel: frames, Mannheim offsets, meshes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frames", help="frame/invariant CSV for a surface spec")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    _add_numerics_flags(p)
    p.set_defaults(func=cmd_frames)

    p = sub.add_parser("offset", help="verify a Mannheim offset (JSON report + CSV)")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True, help="output base path (.json/.csv)")
    p.add_argument("--mannheim-c", type=float, default=1.0, dest="mannheim_c")
    p.add_argument("--mannheim-cstar", type=float, default=0.0, dest="mannheim_cstar")
    _add_numerics_flags(p)
    p.set_defaults(func=cmd_offset)

    p = sub.add_parser("mesh", help="Wavefront OBJ mesh of the surface")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--v-range", default="0,1", dest="v_range")
    p.add_argument("--v-samples", type=int, default=9, dest="v_samples")
    p.add_argument("--offset", action="store_true",
                   help="append the Mannheim offset surface as a second object")
    p.add_argument("--mannheim-c", type=float, default=1.0, dest="mannheim_c")
    p.add_argument("--mannheim-cstar", type=float, default=0.0, dest="mannheim_cstar")
    _add_numerics_flags(p)
    p.set_defaults(func=cmd_mesh)

    p = sub.add_parser("reconstruct", help="integrate an invariant profile to a surface")
    p.add_argument("--input", required=True, help="profile JSON")
    p.add_argument("--out", required=True, help="output base path (.json/.csv)")
    _add_numerics_flags(p)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("study", help="convert line <-> dual unit vector")
    p.add_argument("--input", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--direction", choices=["auto", "line-to-dual", "dual-to-line"],
                   default="auto")
    p.set_defaults(func=cmd_study)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecFileError as exc:
        _print_error(exc)
        return EXIT_SPEC
    except _DEGENERACY_ERRORS as exc:
        _print_error(exc)
        return EXIT_DEGENERACY
    except (InvalidDirection, NotUnit, NonFinite) as exc:
        _print_error(exc)
        return EXIT_SPEC
    except GeometryError as exc:
        _print_error(exc)
        return EXIT_DEGENERACY
    except OSError as exc:
        _print_error(exc)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
