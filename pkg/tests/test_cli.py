import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from lorentz_conchoid.cli import main

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("UPDATE_GOLDEN") == "1"

FRAME = ["frame", "--psi", "0.5", "--psi-star", "0.1", "--sigma", "0.8", "--sigma-star", "0.2",
         "--format", "json"]
FRAME_TEXT = ["frame", "--psi", "0.5", "--psi-star", "0.1", "--sigma", "0.8", "--sigma-star", "0.2"]
ORBIT = ["orbit", "--psi", "0.5", "--psi-star", "0.1", "--sigma", "0.8", "--sigma-star", "0.2",
         "--p", "0.7", "--p-star", "0.3", "--q", "0.4", "--q-star", "-0.1", "--format", "json"]
CONE = ["surface", "--case", "v3", "--psi-range", "-1:1:21", "--psi-star-range", "0:0:1",
        "--ruling-range", "1:1:1"]
SHEET = ["surface", "--case", "v1-sigma0", "--sigma-star", "0.3", "--psi-range", "0.2:2:10",
         "--psi-star-range", "0.3:0.3:1", "--ruling-range", "-2:2:9"]
VERIFY = ["verify", "--suite", "v3_hyperbola"]


def run(argv, capsys):
    # argparse rejects bad flags by raising SystemExit
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def check_golden(name: str, data: bytes):
    path = GOLDEN / name
    if UPDATE:
        path.write_bytes(data)
    assert path.exists(), f"missing golden file {name}; run with UPDATE_GOLDEN=1"
    assert data == path.read_bytes()


@pytest.mark.parametrize("argv,name", [(FRAME, "frame.json"), (FRAME_TEXT, "frame.txt"),
                                       (ORBIT, "orbit.json"), (VERIFY, "verify_v3_hyperbola.json")])
def test_stdout_golden(argv, name, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    check_golden(name, out.encode())
    assert run(argv, capsys)[1] == out


@pytest.mark.parametrize("argv,name", [(CONE, "cone.csv"), (SHEET, "sheet.obj")])
def test_surface_golden(argv, name, tmp_path, capsys):
    first = tmp_path / name
    code, out, _ = run(argv + ["--out", str(first)], capsys)
    assert code == 0 and "0 skipped" in out
    check_golden(name, first.read_bytes())
    second = tmp_path / ("again_" + name)
    run(argv + ["--out", str(second)], capsys)
    assert first.read_bytes() == second.read_bytes()


def test_frame_rest_position_json(capsys):
    argv = ["frame", "--psi", "0", "--psi-star", "0", "--sigma", "0.8", "--sigma-star", "0",
            "--format", "json"]
    code, out, _ = run(argv, capsys)
    rep = json.loads(out)
    assert code == 0 and rep["v1"]["re"] == [-1.0, 0.0, 0.0]
    assert rep["dual_lorentz_orthogonal"] is True


def test_cone_rows_satisfy_hyperbola(tmp_path, capsys):
    out = tmp_path / "cone.csv"
    assert run(CONE + ["--out", str(out)], capsys)[0] == 0
    rows = out.read_text().splitlines()[1:]
    assert len(rows) == 21
    for row in rows:
        psi, ps, lam, y1, y2, y3 = map(float, row.split(","))
        assert abs(y3 * y3 - y2 * y2 - lam * lam) <= 1e-12
        assert abs(y1 - ps) <= 1e-15


def test_json_surface_and_psi0_case(tmp_path, capsys):
    out = tmp_path / "g.json"
    argv = ["surface", "--case", "v2-psi0", "--psi-range", "0.2:1:5", "--psi-star-range",
            "0.5:0.5:1", "--ruling-range", "-1:1:3", "--out", str(out)]
    assert run(argv, capsys)[0] == 0
    data = json.loads(out.read_text())
    assert data["grid"]["first_axis"] == "sigma" and len(data["samples"]) == 15


def test_verify_report_shape(capsys):
    code, out, _ = run(["verify", "--suite", "reconcile", "--samples", "200"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    assert rep["suites"][0]["ledger_differences"] == {}


def test_verify_writes_report_file(tmp_path, capsys):
    path = tmp_path / "rep.json"
    code, out, _ = run(VERIFY + ["--out", str(path)], capsys)
    assert code == 0 and path.read_text() == out


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"psi": 0.5, "psi-star": 0.1, "sigma": 0.8, "sigma_star": 0.2,
                               "format": "json"}))
    code, out, _ = run(["frame", "--config", str(cfg)], capsys)
    assert code == 0
    assert out == run(FRAME, capsys)[1]
    code, out, _ = run(["frame", "--config", str(cfg), "--psi", "0"], capsys)
    assert json.loads(out)["psi"] == [0.0, 0.1]


# exit code 1: a suite fails
def test_exit_1_on_suite_failure(capsys):
    code, out, _ = run(["verify", "--suite", "helicoid", "--tol", "1e-30"], capsys)
    assert code == 1 and json.loads(out)["passed"] is False


# exit code 2: flags and config
@pytest.mark.parametrize("argv", [
    ["frame", "--psi", "abc"],
    ["frame", "--psi", "nan", "--sigma", "1"],
    ["frame", "--psi", "inf", "--sigma", "1"],
    ["frame", "--psi", "0.5"],
    ["frame", "--psi", "0.5", "--sigma", "1", "--branch", "2"],
    ["frame", "--psi", "0.5", "--sigma", "1", "--format", "xml"],
    ["surface", "--case", "v3", "--out", "x.xyz"],
    ["surface", "--case", "v5", "--out", "x.csv"],
    ["surface", "--case", "v3", "--psi-range", "0:1", "--out", "x.csv"],
    ["verify", "--suite", "nope"],
    ["verify", "--samples", "0"],
    ["verify", "--tol", "-1"],
    ["orbit", "--psi", "0.5", "--sigma", "0.8", "--p", "0.3"],
])
def test_exit_2_on_bad_flags(argv, capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert run(argv, capsys)[0] == 2
    assert not (tmp_path / "x.xyz").exists()


@pytest.mark.parametrize("content", ['{"psi": "abc", "sigma": 1}', '{"bogus": 1}', "[1, 2]",
                                     "not json", '{"psi": NaN, "sigma": 1}'])
def test_exit_2_on_bad_config(content, tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(content)
    code, _, err = run(["frame", "--config", str(cfg)], capsys)
    assert code == 2 and "error" in err


def test_exit_2_on_missing_config(tmp_path, capsys):
    assert run(["frame", "--config", str(tmp_path / "none.json")], capsys)[0] == 2


def test_exit_2_on_obj_without_2d_slice(tmp_path, capsys):
    argv = CONE + ["--out", str(tmp_path / "line.obj")]
    assert run(argv, capsys)[0] == 2


# exit code 3: degenerate configuration
def test_exit_3_on_degenerate_frame(capsys):
    code, _, err = run(["frame", "--psi", "0", "--sigma", "0"], capsys)
    assert code == 3 and "degenerate" in err


def test_exit_3_on_degenerate_orbit(capsys):
    argv = ["orbit", "--psi", "0.5", "--sigma", "0.8", "--p", "0.3", "--q", "-0.3"]
    assert run(argv, capsys)[0] == 3


# exit code 4: skipped cells in an OBJ slice
def test_exit_4_on_incomplete_obj_slice(tmp_path, capsys):
    out = tmp_path / "s.obj"
    argv = ["surface", "--case", "v1-sigma0", "--sigma-star", "0.3", "--psi-range", "-1:1:5",
            "--out", str(out)]
    code, _, err = run(argv, capsys)
    assert code == 4 and "skipped" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lorentz_conchoid", "frame", "--psi", "0",
                           "--sigma", "0"], capture_output=True, text=True)
    assert proc.returncode == 3
