import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import fibrecheck as fc

FIXTURES = Path(
    os.environ.get(
        "FIBRECHECK_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "tests" / "fixtures"
    )
)

BLOWUP = "field Q\nbase y1 y2\nvars x\nideal: y1*x - y2\ncheck both\n"


def test_blowup_verdicts():
    p = fc.parse_problem(BLOWUP)
    assert p.base_vars == ["y1", "y2"] and p.fibre_vars == ["x"]
    v = fc.check_openness(p)
    assert (v.outcome, v.failing_power) == ("fail", 2)
    assert v.witness_g == "x[1] - x[2]"
    assert v.witness_r in ("y1", "y2")
    f = fc.check_flatness(p)
    assert (f.outcome, f.failing_power) == ("fail", 2)
    assert f.certificate_r == "y1"
    assert f.certificate_v == ["x[1] - x[2]"]
    assert [s["k"] for s in f.powers] == [1, 2]


def test_positive_and_inconclusive():
    p = fc.parse_problem("base y\nvars x\nideal: x^2 - y\n")
    assert fc.check_openness(p).outcome == "pass"
    assert fc.check_flatness(p, order="lex").outcome == "pass"
    capped = fc.check_openness(fc.parse_problem(BLOWUP), max_power=1)
    assert capped.outcome == "inconclusive-pass"


def test_report_rendering():
    p = fc.parse_problem(BLOWUP)
    verdicts = [fc.check_openness(p), fc.check_flatness(p)]
    text = fc.render_report(p, verdicts)
    assert "NOT OPEN (vertical component at fibred power 2)" in text
    assert "witness r = y1" in text
    doc = json.loads(fc.render_report(p, verdicts, format="json"))
    assert [c["kind"] for c in doc["checks"]] == ["open", "flat"]
    assert fc.parse_problem(p.render()) == p


def test_algebra_helpers():
    basis = fc.groebner_basis(["y1", "y2"], ["t"], ["y1 - t^2", "y2 - t^3"], order="lex")
    assert "y1^3 - y2^2" in basis
    assert fc.krull_dim(["y1", "y2"], ["x"], ["y1*x - y2"]) == 2
    assert fc.fibre_dim(["y1", "y2"], ["x"], ["y1*x - y2"], [0, 0]) == 1
    assert fc.fibre_dim(["y1", "y2"], ["x"], ["y1*x - y2"], [Fraction(1, 2), 1]) == 0
    assert fc.groebner_basis(["y"], ["x"], ["3*x + 1"], field=5) == ["x + 2"]


def test_errors_map_to_exceptions():
    with pytest.raises(fc.ParseError, match="undeclared variable x"):
        fc.parse_problem("base y1\nideal: y1*x\nvars x\n")
    with pytest.raises(fc.UnsupportedInput):
        fc.check_flatness(fc.parse_problem("field F 7\nbase y\nvars x\n"))
    aborted = fc.check_openness(fc.parse_problem(BLOWUP), pair_limit=1)
    assert aborted.outcome == "aborted" and aborted.abort_limit == "pair-limit"
    assert issubclass(fc.ParseError, fc.Error)


def test_cli_entry_point():
    code, out, err = fc.run(["--json", "--input", str(FIXTURES / "cusp.alg")])
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["checks"][0]["failing_power"] == 1
    assert fc.run(["--input", str(FIXTURES / "malformed.alg")])[0] == 1
    assert fc.run([], stdin=BLOWUP)[0] == 0
