import csv
import json

import pytest

from dlgeom.cli import main
from dlgeom.lorentz import Vec3L

CONE = {"catalog": "cone", "params": {"a": 0.6, "b": 0.8},
        "domain": {"s_min": 0.0, "s_max": 1.0, "samples": 5}}
HELI = {"catalog": "helicoidal",
        "params": {"a": 0.6, "b": 0.8, "delta0": 0.2, "Delta0": 0.1, "c0": [0, 0, 0]},
        "domain": {"s_min": 0.05, "s_max": 0.95, "samples": 41}}


def _spec(tmp_path, payload, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def _read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


# ---------------------------------------------------------------------------
# frames

def test_frames_cone(tmp_path):
    spec = _spec(tmp_path, {**CONE, "domain": {"s_min": 0.0, "s_max": 1.0, "samples": 3}})
    out = tmp_path / "frames.csv"
    assert main(["frames", "--input", spec, "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert len(rows) == 3
    assert all(float(r["gamma"]) == pytest.approx(0.75, abs=1e-12) for r in rows)


def test_frames_helicoidal_Delta_column(tmp_path):
    spec = _spec(tmp_path, HELI)
    out = tmp_path / "frames.csv"
    assert main(["frames", "--input", spec, "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert all(float(r["Delta"]) == pytest.approx(0.1, abs=1e-10) for r in rows)


def test_frames_rejects_two_samples(tmp_path):
    spec = _spec(tmp_path, {**CONE, "domain": {"s_min": 0.0, "s_max": 1.0, "samples": 2}})
    assert main(["frames", "--input", spec, "--out", str(tmp_path / "x.csv")]) == 2


def test_frames_rejects_bad_catalog_params(tmp_path):
    spec = _spec(tmp_path, {**CONE, "params": {"a": 0.5, "b": 0.8}})
    assert main(["frames", "--input", spec, "--out", str(tmp_path / "x.csv")]) == 2


def test_frames_rejects_reversed_domain(tmp_path):
    spec = _spec(tmp_path, {**CONE, "domain": {"s_min": 1.0, "s_max": 0.0, "samples": 5}})
    assert main(["frames", "--input", spec, "--out", str(tmp_path / "x.csv")]) == 2


def test_frames_custom_expression_surface(tmp_path):
    payload = {
        "catalog": "custom",
        "domain": {"s_min": 0.0, "s_max": 0.5, "samples": 5},
        "custom": {"e": ["0.8*sinh(u/0.8)", "0.8*cosh(u/0.8)", "0.6"],
                   "c": ["0", "0", "0"]},
    }
    out = tmp_path / "frames.csv"
    assert main(["frames", "--input", _spec(tmp_path, payload), "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert all(float(r["gamma"]) == pytest.approx(0.75, abs=1e-10) for r in rows)


def test_frames_custom_timelike_surface(tmp_path):
    # timelike unit ruling with unit spacelike tangent: a planar hyperbola
    payload = {
        "catalog": "custom",
        "domain": {"s_min": 0.0, "s_max": 1.0, "samples": 7},
        "custom": {"e": ["cosh(u)", "sinh(u)", "0"],
                   "c": ["0", "0", "0"],
                   "kind": "timelike-surface"},
    }
    out = tmp_path / "frames.csv"
    assert main(["frames", "--input", _spec(tmp_path, payload), "--out", str(out)]) == 0
    rows = _read_csv(out)
    for r in rows:
        assert float(r["gamma"]) == pytest.approx(0.0, abs=1e-9)
        assert float(r["R_re"]) == pytest.approx(1.0, abs=1e-9)


def test_custom_expression_rejects_unsafe_code(tmp_path):
    payload = {
        "catalog": "custom",
        "domain": {"s_min": 0.0, "s_max": 0.5, "samples": 5},
        "custom": {"e": ["__import__('os').system('true')", "1", "0"],
                   "c": ["0", "0", "0"]},
    }
    assert main(["frames", "--input", _spec(tmp_path, payload),
                 "--out", str(tmp_path / "x.csv")]) == 2


# ---------------------------------------------------------------------------
# offset

def test_offset_helicoidal_passes(tmp_path):
    spec = _spec(tmp_path, HELI)
    out = tmp_path / "report"
    code = main(["offset", "--input", spec, "--out", str(out),
                 "--mannheim-c", "1.0", "--mannheim-cstar", "0.0"])
    assert code == 0
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["verdicts"]["passed"] is True
    assert report["summary"]["max"]["gamma1"] < 1e-6


def test_offset_report_summary_matches_rows(tmp_path):
    spec = _spec(tmp_path, HELI)
    out = tmp_path / "report.json"
    assert main(["offset", "--input", spec, "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    rows = report["samples"]
    for key, stored in report["summary"]["max"].items():
        assert stored == max(r["residuals"][key] for r in rows)
    for key, stored in report["summary"]["mean"].items():
        again = sum(r["residuals"][key] for r in rows) / len(rows)
        assert stored == again


def test_offset_cone_delta1_equals_minus_theta_star(tmp_path):
    spec = _spec(tmp_path, {**CONE, "domain": {"s_min": 0.05, "s_max": 0.95, "samples": 21}})
    out = tmp_path / "cone_report"
    assert main(["offset", "--input", spec, "--out", str(out),
                 "--mannheim-c", "1.0", "--mannheim-cstar", "0.3"]) == 0
    rows = _read_csv(tmp_path / "cone_report.csv")
    for r in rows:
        assert float(r["delta1_meas"]) == pytest.approx(-float(r["theta_star"]), abs=1e-8)


def test_offset_tolerance_failure_exit_code(tmp_path):
    spec = _spec(tmp_path, HELI)
    code = main(["offset", "--input", spec, "--out", str(tmp_path / "r"),
                 "--tolerance", "1e-18"])
    assert code == 4


def test_offset_rejects_timelike_base(tmp_path):
    payload = {
        "catalog": "custom",
        "domain": {"s_min": 0.0, "s_max": 1.0, "samples": 7},
        "custom": {"e": ["cosh(u)", "sinh(u)", "0"], "c": ["0", "0", "0"],
                   "kind": "timelike-surface"},
    }
    assert main(["offset", "--input", _spec(tmp_path, payload),
                 "--out", str(tmp_path / "r")]) == 2


def test_offset_zero_gamma_degenerate(tmp_path):
    spec = _spec(tmp_path, {"catalog": "cone", "params": {"a": 0.0, "b": 1.0},
                            "domain": {"s_min": 0.05, "s_max": 0.95, "samples": 11}})
    assert main(["offset", "--input", spec, "--out", str(tmp_path / "r")]) == 3


# ---------------------------------------------------------------------------
# mesh

def test_mesh_minimal_grid(tmp_path):
    spec = _spec(tmp_path, {**CONE, "domain": {"s_min": 0.0, "s_max": 1.0, "samples": 3}})
    out = tmp_path / "m.obj"
    assert main(["mesh", "--input", spec, "--out", str(out), "--samples", "3",
                 "--v-range", "0,1", "--v-samples", "2"]) == 0
    lines = out.read_text().splitlines()
    verts = [ln for ln in lines if ln.startswith("v ")]
    faces = [ln for ln in lines if ln.startswith("f ")]
    assert len(verts) == 6 and len(faces) == 2
    # vertex at (s=0, v=1): c0 + e(0) = (0, 0.8, 0.6)
    x, y, z = (float(t) for t in verts[1].split()[1:])
    assert (x, y, z) == pytest.approx((0.0, 0.8, 0.6), abs=1e-9)


def test_mesh_vertices_reproduce_surface_map(tmp_path):
    spec = _spec(tmp_path, {**HELI, "domain": {"s_min": 0.0, "s_max": 0.4, "samples": 5}})
    out = tmp_path / "m.obj"
    assert main(["mesh", "--input", spec, "--out", str(out),
                 "--v-range=-0.5,0.5", "--v-samples", "3"]) == 0
    from dlgeom import catalog
    ref = catalog.helicoidal(domain=(0.0, 0.4), samples=5)
    verts = [ln.split()[1:] for ln in out.read_text().splitlines() if ln.startswith("v ")]
    k = 0
    for s in ref.grid():
        c = ref.base_curve(float(s))
        e = ref.indicatrix(float(s))
        for v in (-0.5, 0.0, 0.5):
            p = c + v * e
            got = Vec3L(*(float(t) for t in verts[k]))
            assert max(abs(x - y) for x, y in zip(got, p)) < 1e-8
            k += 1


def test_mesh_rejects_degenerate_band(tmp_path):
    spec = _spec(tmp_path, CONE)
    assert main(["mesh", "--input", spec, "--out", str(tmp_path / "m.obj"),
                 "--v-range", "0,0", "--v-samples", "2"]) == 2


def test_mesh_offset_object(tmp_path):
    spec = _spec(tmp_path, {**HELI, "domain": {"s_min": 0.05, "s_max": 0.95, "samples": 7}})
    out = tmp_path / "m.obj"
    assert main(["mesh", "--input", spec, "--out", str(out), "--offset",
                 "--v-range", "0,1", "--v-samples", "2"]) == 0
    text = out.read_text().splitlines()
    assert "o base" in text and "o offset" in text
    verts = [ln.split()[1:] for ln in text if ln.startswith("v ")]
    assert len(verts) == 2 * 7 * 2
    # offset ruling at each s: vertex(v=1) - vertex(v=0) equals e1(s)
    from dlgeom import catalog
    from dlgeom.mannheim import MannheimParams, construct_offset, offset_angles
    from dlgeom.ruled import darboux_frame
    base = catalog.helicoidal(domain=(0.05, 0.95), samples=7)
    frames = darboux_frame(base)
    angles = offset_angles(frames, MannheimParams(1.0, 0.0))
    off = construct_offset(base, frames, angles)
    for i, s in enumerate(base.grid()):
        lo = verts[14 + 2 * i]
        hi = verts[14 + 2 * i + 1]
        got = Vec3L(*(float(a) - float(b) for a, b in zip(hi, lo)))
        want = off.indicatrix(float(s))
        assert max(abs(x - y) for x, y in zip(got, want)) < 1e-8


# ---------------------------------------------------------------------------
# reconstruct

def _profile_payload(**overrides):
    payload = {
        "gamma": 0.75, "delta": 0.2, "Delta": 0.1,
        "frame": {"e": [0.0, 0.8, 0.6], "t": [1.0, 0.0, 0.0],
                  "g": [0.0, 0.6, -0.8], "c": [0.0, 0.0, 0.0]},
        "domain": {"s_min": 0.0, "s_max": 1.0, "samples": 11},
    }
    payload.update(overrides)
    return payload


def test_reconstruct_cone_profile(tmp_path):
    prof = _profile_payload(gamma=0.75, delta=0.0, Delta=0.0)
    path = tmp_path / "prof.json"
    path.write_text(json.dumps(prof))
    out = tmp_path / "recon"
    assert main(["reconstruct", "--input", str(path), "--out", str(out)]) == 0
    rows = _read_csv(tmp_path / "recon.csv")
    assert len(rows) == 11
    residuals = json.loads((tmp_path / "recon.json").read_text())
    assert residuals["max"]["gamma"] < 1e-9
    # a cone keeps its striction point fixed
    for r in rows:
        drift = max(abs(float(r[k])) for k in ("c1", "c2", "c3"))
        assert drift < 1e-9


def test_reconstruct_round_trip_residuals(tmp_path):
    path = tmp_path / "prof.json"
    path.write_text(json.dumps(_profile_payload()))
    out = tmp_path / "recon"
    assert main(["reconstruct", "--input", str(path), "--out", str(out)]) == 0
    residuals = json.loads((tmp_path / "recon.json").read_text())
    for key in ("gamma", "delta", "Delta"):
        assert residuals["max"][key] < 1e-7


def test_reconstruct_expression_profile(tmp_path):
    prof = _profile_payload(gamma="0.75 + 0.1*sin(u)")
    path = tmp_path / "prof.json"
    path.write_text(json.dumps(prof))
    assert main(["reconstruct", "--input", str(path), "--out", str(tmp_path / "r")]) == 0
    residuals = json.loads((tmp_path / "r.json").read_text())
    assert residuals["max"]["gamma"] < 1e-7


def test_reconstruct_empty_domain_single_row(tmp_path):
    prof = _profile_payload(domain={"s_min": 0.3, "s_max": 0.3, "samples": 11})
    path = tmp_path / "prof.json"
    path.write_text(json.dumps(prof))
    assert main(["reconstruct", "--input", str(path), "--out", str(tmp_path / "r")]) == 0
    assert len(_read_csv(tmp_path / "r.csv")) == 1


def test_reconstruct_rejects_skew_frame(tmp_path):
    prof = _profile_payload()
    prof["frame"]["g"] = [0.0, -0.6, 0.8]
    path = tmp_path / "prof.json"
    path.write_text(json.dumps(prof))
    assert main(["reconstruct", "--input", str(path), "--out", str(tmp_path / "r")]) == 2


# ---------------------------------------------------------------------------
# study

def test_study_line_to_dual(tmp_path):
    path = tmp_path / "line.json"
    path.write_text(json.dumps({"point": [0, 0, 0], "dir": [0, 1, 0]}))
    out = tmp_path / "dual.json"
    assert main(["study", "--input", str(path), "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["a"] == [0.0, 1.0, 0.0]
    assert data["a_star"] == [0.0, 0.0, 0.0]
    assert data["round_trip_ok"] is True


def test_study_round_trip_moment(tmp_path):
    path = tmp_path / "line.json"
    path.write_text(json.dumps({"point": [1, 0, 0], "dir": [0, 1, 0]}))
    out = tmp_path / "dual.json"
    assert main(["study", "--input", str(path), "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["a_star"] == [0.0, 0.0, -1.0]
    back_in = tmp_path / "back.json"
    back_in.write_text(json.dumps({"a": data["a"], "a_star": data["a_star"]}))
    back_out = tmp_path / "line2.json"
    assert main(["study", "--input", str(back_in), "--out", str(back_out)]) == 0
    line = json.loads(back_out.read_text())
    assert line["dir"] == [0.0, 1.0, 0.0]
    assert line["round_trip_ok"] is True


def test_study_lightlike_direction_fails(tmp_path):
    path = tmp_path / "line.json"
    path.write_text(json.dumps({"point": [0, 0, 0], "dir": [1, 1, 0]}))
    assert main(["study", "--input", str(path)]) == 2


def test_study_non_unit_dual_fails(tmp_path):
    path = tmp_path / "dual.json"
    path.write_text(json.dumps({"a": [0, 1, 0], "a_star": [0, 2, 0]}))
    assert main(["study", "--input", str(path)]) == 2


# ---------------------------------------------------------------------------
# misc contract

def test_missing_input_file_is_io_error(tmp_path):
    assert main(["frames", "--input", str(tmp_path / "nope.json"),
                 "--out", str(tmp_path / "x.csv")]) == 5


def test_outputs_deterministic(tmp_path):
    spec = _spec(tmp_path, {**HELI, "domain": {"s_min": 0.05, "s_max": 0.95, "samples": 11}})
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["offset", "--input", spec, "--out", str(a)]) == 0
    assert main(["offset", "--input", spec, "--out", str(b)]) == 0
    assert (tmp_path / "a.json").read_text() == (tmp_path / "b.json").read_text()
    assert (tmp_path / "a.csv").read_text() == (tmp_path / "b.csv").read_text()
