import pytest

from swcalc.errors import ExpressionError, InvalidParameterError
from swcalc.tools.basic_classes import basic_class_candidates
from swcalc.tools.demo import run_demo
from swcalc.tools.geography import geography_table
from swcalc.tools.lefschetz import lefschetz_report
from swcalc.tools.manifolds import (
    characteristic_numbers,
    compare_homeomorphism,
    evaluate_expression,
    symplectic_obstruction,
)

ZPRIME = {"op": "model", "name": "Zprime_E", "params": {"g": 2, "L": [1]}}
SURGERED = {"op": "torus_surgery", "child": ZPRIME, "m_vector": [2]}


def test_evaluate_expression():
    result = evaluate_expression({"op": "model", "name": "Zmg", "params": {"m": 3, "g": 1}})
    assert result["manifold"]["e"] == 240
    assert result["manifold"]["spin"] == "yes"
    assert result["sw_text"]


def test_evaluate_expression_errors():
    with pytest.raises(ExpressionError, match="unknown model"):
        evaluate_expression({"op": "model", "name": "Q"})


def test_characteristic_numbers():
    result = characteristic_numbers({"op": "model", "name": "H", "params": {"m": 1}})
    assert (result["e"], result["sign"], result["chi"], result["c1_squared"]) == (76, -48, 7, 8)


def test_compare_homeomorphism():
    result = compare_homeomorphism(ZPRIME, SURGERED)
    assert result["verdict"] == "homeomorphic"
    assert result["left_name"] != result["right_name"]


def test_symplectic_obstruction():
    assert symplectic_obstruction(ZPRIME)["verdict"] == "consistent"
    result = symplectic_obstruction(SURGERED)
    assert (result["verdict"], result["coefficient"]) == ("obstructed", 3)


def test_geography_table():
    result = geography_table(m_min=3, m_max=3, g_min=1, g_max=2)
    assert result["count"] == 2
    assert [r["verdict"] for r in result["rows"]] == ["excluded", "exception_B"]


def test_basic_class_candidates():
    result = basic_class_candidates("Y2g", {"g": 3})
    assert result == {
        "scenario": "Y(2,3)",
        "status": "candidates",
        "count": 2,
        "candidates": ["-4*tau - 2*Sigma", "4*tau + 2*Sigma"],
    }
    assert basic_class_candidates("Yprime_neg1", {"g": 1, "L": [1]})["status"] == "vanishes"
    with pytest.raises(InvalidParameterError):
        basic_class_candidates("nope")


def test_lefschetz_report():
    result = lefschetz_report(3, 2, audit=True)
    assert result["enk_fibration"]["fiber_genus"] == 6
    assert result["singular_fiber_model"]["fiber_square"] == 0
    assert result["vanishing_cycle_audit"]["extra_total"] == 16
    assert "vanishing_cycle_audit" not in lefschetz_report(3, 2)


def test_run_demo_tool():
    result = run_demo("surgery")
    assert result["section"] == "surgery"
    assert result["passed"]
    assert all(c["passed"] for c in result["checks"])
