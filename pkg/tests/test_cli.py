# -*- coding: utf-8 -*-

import json
import math

import numpy as np

import cli.commands
from cli.config import parse_grid
from cli.main import main
from minorant.constants import minorant_explicit


def read_json(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


# ==================== constants ====================

def test_constants_csv(tmp_path):
    assert main(["constants", "--q", "0.5,1,2,3", "--format", "csv", "--out", str(tmp_path)]) == 0
    lines = (tmp_path / "constants.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "q,a,c,kappa,verified,method"
    # q ≤ 1 另有精确凹证书
    assert len(lines) == 1 + 6
    assert all(line.split(",")[4] == "1" for line in lines[1:])


def test_constants_json(tmp_path):
    assert main(["constants", "--q", "3,4", "--out", str(tmp_path)]) == 0
    data = read_json(tmp_path / "constants.json")
    assert [c["q"] for c in data["constants"]] == [3.0, 4.0]
    assert abs(data["constants"][0]["c"] - 2.134) < 1e-2
    doubtful = [r for r in data["reference"] if r["c"] == 0.41][0]
    assert doubtful["verified"] is False
    assert doubtful["claimed_multiplier"] == 0.248


def test_constants_is_deterministic(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    for out in (first, second):
        assert main(["constants", "--q", "1,2.5", "--out", str(out)]) == 0
    assert (first / "constants.json").read_bytes() == (second / "constants.json").read_bytes()


def test_constants_rejects_bad_q():
    assert main(["constants", "--q=-1"]) == 2
    assert main(["constants", "--q", "abc"]) == 2


def test_constants_failing_construction_exits_3(tmp_path, monkeypatch):
    # 1.1·cos x ≥ 1 − 0.41x² 不成立
    monkeypatch.setattr(cli.commands, "minorant_optimize", lambda q: minorant_explicit(1.1, 0.41, q))
    assert main(["constants", "--q", "2", "--out", str(tmp_path)]) == 3
    data = read_json(tmp_path / "constants.json")
    assert data["constants"][0]["verified"] is False


# ==================== 参数校验 ====================

def test_signal_source_is_required():
    assert main(["certify"]) == 2
    assert main(["certify", "--gen", "gaussian", "--signal", "x.csv"]) == 2


def test_bad_grid_and_generator():
    assert main(["analyze", "--gen", "gaussian", "--grid", "N=abc"]) == 2
    assert main(["analyze", "--gen", "square(1)"]) == 2


def test_parse_grid():
    grid = parse_grid("N=2048,win=-4:4")
    assert (grid.n, grid.lo, grid.hi) == (2048, -4.0, 4.0)
    assert parse_grid(None).window == (-8.0, 8.0)


# ==================== analyze ====================

def test_analyze_gaussian(tmp_path):
    assert main(["analyze", "--gen", "gaussian", "--out", str(tmp_path)]) == 0
    data = read_json(tmp_path / "analysis.json")
    assert data["signal"] == "gaussian"
    assert abs(data["heisenberg"]["rho"] - 1.0) < 1e-6
    assert len(data["frft_moments"]) == 8
    for item in data["frft_moments"]:
        assert item["moment"] <= item["rhs"] + 1e-9


def test_analyze_rect_reports_infinite_moment(tmp_path):
    assert main(["analyze", "--gen", "rect(1)", "--out", str(tmp_path)]) == 0
    data = read_json(tmp_path / "analysis.json")
    assert data["heisenberg"] is None
    assert all(item["rhs"] is None for item in data["frft_moments"])


# ==================== certify ====================

def test_certify_gaussian(tmp_path):
    assert main(["certify", "--gen", "gaussian", "--dirs", "8", "--out", str(tmp_path)]) == 0
    region = read_json(tmp_path / "region.json")
    assert region["mode"] == "rhombus"
    assert abs(region["rhombus"]["dx"] - math.sqrt(2 / math.pi)) < 1e-6
    assert region["validation"]["pass"] is True
    assert read_json(tmp_path / "validation.json")["pass"] is True


def test_certify_rect_rhombus_needs_moment(tmp_path):
    assert main(["certify", "--gen", "rect(1)", "--dirs", "4", "--out", str(tmp_path)]) == 4


def test_certify_rect_star(tmp_path):
    args = ["certify", "--gen", "rect(1)", "--mode", "star", "--q", "2", "--dirs", "4",
            "--format", "csv", "--out", str(tmp_path)]
    assert main(args) == 0
    region = read_json(tmp_path / "region.json")
    assert region["mode"] == "star"
    assert len(region["star"]) == 4
    lines = (tmp_path / "validation.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "theta,tau_cert,tau_empirical,pass"
    assert len(lines) == 5


def test_certify_revalidate(tmp_path):
    args = ["certify", "--gen", "hermite(1)", "--mode", "star", "--q", "1", "--dirs", "4"]
    assert main(args + ["--out", str(tmp_path)]) == 0
    path = str(tmp_path / "region.json")
    assert main(args + ["--revalidate", path, "--workers", "2"]) == 0


def test_certify_revalidate_catches_tampering(tmp_path):
    args = ["certify", "--gen", "rect(1)", "--mode", "star", "--q", "2", "--dirs", "2"]
    assert main(args + ["--out", str(tmp_path)]) == 0
    path = tmp_path / "region.json"
    data = read_json(path)
    for item in data["star"]:
        item["tau"] = 1.5
    path.write_text(json.dumps(data), encoding="utf-8")
    assert main(args + ["--revalidate", str(path)]) == 3


# ==================== scan ====================

def test_scan_gaussian(tmp_path):
    assert main(["scan", "--gen", "gaussian", "--dirs", "4", "--out", str(tmp_path)]) == 0
    with open(tmp_path / "grid.csv", encoding="utf-8") as f:
        assert f.readline().strip() == "x,y,re,im,abs"
    table = np.loadtxt(tmp_path / "grid.csv", delimiter=",", skiprows=1)
    assert table.shape == (65 * 65, 5)
    assert abs(table[:, 4].max() - 1.0) < 1e-9
    rays = read_json(tmp_path / "rays.json")
    assert len(rays) == 4
    assert all(r["first_zero"] is None for r in rays)


def test_scan_hermite_rays(tmp_path):
    assert main(["scan", "--gen", "hermite(1)", "--dirs", "4", "--points", "9", "--out", str(tmp_path)]) == 0
    for ray in read_json(tmp_path / "rays.json"):
        assert abs(ray["first_zero"] - 1 / math.sqrt(math.pi)) < 1e-3


def test_scan_from_csv_signal(tmp_path, hermite1):
    from signals.csv_io import write_signal_csv

    path = str(tmp_path / "h1.csv")
    write_signal_csv(hermite1, path)
    assert main(["scan", "--signal", path, "--dirs", "2", "--points", "5"]) == 0

    empty = tmp_path / "empty.csv"
    empty.write_text("", encoding="utf-8")
    assert main(["scan", "--signal", str(empty)]) == 2


def test_scan_csv_to_stdout(capsys):
    assert main(["scan", "--gen", "gaussian", "--dirs", "2", "--points", "5", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "x,y,re,im,abs"
    assert len(lines) == 1 + 5 * 5


def test_scan_json_summary_to_stdout(capsys):
    assert main(["scan", "--gen", "hermite(1)", "--dirs", "2", "--points", "5"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["signal"] == "hermite(1)"
    assert len(data["rays"]) == 2


# ==================== ortho ====================

def test_ortho_hermite(tmp_path):
    assert main(["ortho", "--gen", "hermite(1)", "--out", str(tmp_path)]) == 0
    data = read_json(tmp_path / "ortho.json")
    expected = math.sqrt(2 / (3 * math.pi))
    assert abs(data["a_min"] - expected) < 1e-6
    assert abs(data["omega_min"] - expected) < 1e-6
    assert abs(data["translate"]["empirical"] - 1 / math.sqrt(math.pi)) < 1e-3


def test_ortho_rect_sides(tmp_path):
    assert main(["ortho", "--gen", "rect(1)", "--side", "modulation", "--out", str(tmp_path)]) == 0
    data = read_json(tmp_path / "ortho.json")
    assert data["a_min"] is None
    assert abs(data["modulation"]["empirical"] - 1.0) < 1e-3
    assert main(["ortho", "--gen", "rect(1)"]) == 4


def test_ortho_csv(tmp_path):
    assert main(["ortho", "--gen", "hermite(1)", "--format", "csv", "--out", str(tmp_path)]) == 0
    assert not (tmp_path / "ortho.json").exists()
    lines = (tmp_path / "ortho.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "side,q,bound,empirical"
    assert [line.split(",")[0] for line in lines[1:]] == ["translate", "modulation"]
    assert abs(float(lines[1].split(",")[2]) - math.sqrt(2 / (3 * math.pi))) < 1e-6
