import json
import math
import os
from pathlib import Path

import pytest

import eqbif

FIXTURES = Path(os.environ.get("EQBIF_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))
CIRCLE = str(FIXTURES / "circle_quartic.json")
SPHERE = str(FIXTURES / "sphere_scalar.json")


def test_snf():
    out = eqbif.snf([[2, 4], [6, 8]])
    assert out["invariant_factors"] == [2, 4]
    assert eqbif.snf([[2, 0], [0, 3]])["invariant_factors"] == [1, 6]


def test_candidates():
    levels = [c["lambda0"] for c in eqbif.candidates(CIRCLE)]
    assert levels == ["0", "1", "4", "9"]


def test_candidates_from_json_text():
    text = Path(CIRCLE).read_text()
    assert len(eqbif.candidates(text)) == 4


def test_analyze_circle_level_one():
    rec = eqbif.analyze(CIRCLE, "1")
    assert rec["V"]["dim"] == 4
    assert rec["verdict"]["global_bifurcation"]
    assert rec["verdict"]["symmetry_breaking"]
    coeffs = sorted(t["coeff"] for t in rec["bif_index"])
    assert coeffs == [-1, -1, 1]


def test_report_sphere():
    rep = eqbif.report(SPHERE)
    dims = [lv["V"]["dim"] for lv in rep["levels"] if lv["lambda0"] != "0"]
    assert dims == [3, 5, 7, 9]
    assert all(lv["verdict"]["odd_dimension_hypothesis"] for lv in rep["levels"][1:])


def test_errors():
    doc = json.loads(Path(CIRCLE).read_text())
    doc["p"] = 3
    with pytest.raises(eqbif.InputError, match="DIM|dim"):
        eqbif.candidates(json.dumps(doc))
    with pytest.raises(eqbif.RefusalError):
        eqbif.analyze(CIRCLE, "16")
    with pytest.raises(eqbif.RefusalError):
        eqbif.newton_branch(2, 4.0)


def test_corroboration():
    crossings = eqbif.stability_scan(8, 0.5, 5.0)
    assert crossings == pytest.approx([1.0, 4.0], abs=1e-6)
    br = eqbif.newton_branch(1, 1.5)
    assert br["converged"]
    assert br["iterations"] <= 10
    assert abs(br["amplitude"] - math.sqrt(0.5)) < 1e-8


def test_selftest_small():
    rep = eqbif.selftest(seed=2, trials=3)
    assert rep["passed"]
    assert len(rep["suites"]) == 22
