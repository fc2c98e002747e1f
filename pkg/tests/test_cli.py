"""End-to-end CLI tests against the JSON fixture files."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from slab_harmonics import MultiPoly, variables
from slab_harmonics.cli import main

FIXTURES = Path(__file__).parent / "fixtures"

F = Fraction


def fixture(name):
    return str(FIXTURES / name)


def test_solve_slab_basic(tmp_path, capsys):
    out = tmp_path / "solution.json"
    code = main(["solve-slab", "--input", fixture("slab_basic.json"), "--output", str(out)])
    assert code == 0
    obj = json.loads(out.read_text())
    h = MultiPoly.from_json_dict(obj["solution"])
    t, y1 = variables(1)
    assert h == t * y1 * y1 + t.scale(F(1, 3)) - (t ** 3).scale(F(1, 3))
    assert obj["report"]["status"] == "pass"


def test_solve_slab_zero_data(tmp_path):
    out = tmp_path / "solution.json"
    assert main(["solve-slab", "--input", fixture("slab_zero.json"), "--output", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert MultiPoly.from_json_dict(obj["solution"]).is_zero


def test_solve_slab_bad_endpoints(capsys):
    code = main(["solve-slab", "--input", fixture("slab_bad_endpoints.json"), "--quiet"])
    assert code == 2
    assert "a < b" in capsys.readouterr().err


def test_solve_slab_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["solve-slab", "--input", str(bad), "--quiet"]) == 2
    assert "error" in capsys.readouterr().err


def test_solve_diffeq_basic(tmp_path):
    out = tmp_path / "solution.json"
    code = main(["solve-diffeq", "--input", fixture("diffeq_basic.json"), "--output", str(out)])
    assert code == 0
    obj = json.loads(out.read_text())
    assert obj["report"]["status"] == "pass"
    # provenance names every pipeline stage
    assert set(obj["provenance"]) == {
        "g_even", "g_odd", "h_even", "antiderivative_u", "intermediate_H", "h_odd",
    }
    # round-trip through the schema is canonical
    h = MultiPoly.from_json_dict(obj["h"])
    assert h.to_json_dict() == obj["h"]


def test_solve_diffeq_nonharmonic(capsys):
    code = main(["solve-diffeq", "--input", fixture("diffeq_nonharmonic.json"), "--quiet"])
    assert code == 2
    assert "harmonic" in capsys.readouterr().err


def test_verify_good(capsys):
    assert main(["verify", "--input", fixture("verify_good.json")]) == 0
    assert main(["verify", "--input", fixture("verify_slab_good.json")]) == 0


def test_verify_tampered_prints_residual(capsys):
    code = main(["verify", "--input", fixture("verify_tampered.json")])
    assert code == 1
    err = capsys.readouterr().err
    # adding t to a solution shifts the difference residual by exactly 1
    assert "residual difference: 1" in err


def test_oracle_compare(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["oracle-compare", "--input", fixture("diffeq_oracle.json"), "--output", str(out)])
    assert code == 0
    assert "r(y) = 0" in capsys.readouterr().out
    obj = json.loads(out.read_text())
    assert obj["report"]["status"] == "pass"
    assert MultiPoly.from_json_dict(obj["report"]["extras"]["r"]).is_zero


def test_oracle_compare_requires_d1(tmp_path, capsys):
    prob = {"d": 2, "g": MultiPoly.zero(2).to_json_dict()}
    path = tmp_path / "d2.json"
    path.write_text(json.dumps(prob))
    assert main(["oracle-compare", "--input", str(path), "--quiet"]) == 2


def test_eval_grid(tmp_path):
    out = tmp_path / "samples.csv"
    code = main([
        "eval", "--input", fixture("poly_saddle.json"),
        "--grid", "t=0:1:1,y1=0:1:1", "--output", str(out),
    ])
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "t,y1,value"
    rows = [tuple(float(v) for v in ln.split(",")) for ln in lines[1:]]
    assert rows == [(0, 0, 0), (0, 1, -1), (1, 0, 1), (1, 1, 0)]


def test_eval_zero_poly(tmp_path):
    out = tmp_path / "samples.csv"
    assert main([
        "eval", "--input", fixture("poly_zero.json"),
        "--grid", "t=0:1:0.5,y1=-1:1:0.5", "--output", str(out),
    ]) == 0
    lines = out.read_text().strip().splitlines()[1:]
    assert lines
    assert all(float(ln.split(",")[-1]) == 0.0 for ln in lines)


@pytest.mark.parametrize("grid", [
    "t=1:0:1,y1=0:1:1",       # empty range
    "t=0:1:0,y1=0:1:1",       # zero step
    "t=0:1:1",                # missing variable
    "t=0:1:1,y1=0:1:1,y2=0:1:1",  # unknown variable
    "bogus",
])
def test_eval_malformed_grid(grid, capsys):
    assert main(["eval", "--input", fixture("poly_saddle.json"), "--grid", grid, "--quiet"]) == 2


def test_self_test_seeded(monkeypatch, capsys):
    monkeypatch.setenv("SLAB_HARMONICS_SEED", "12345")
    assert main(["self-test", "--rounds", "3"]) == 0
    assert "6/6 checks passed" in capsys.readouterr().out
