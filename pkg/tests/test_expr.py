import json
from pathlib import Path

import pytest

from swcalc.constructions import (
    FiberSumNode,
    ModelNode,
    TorusSurgeryNode,
    build_Zmg,
    eval_expr,
    evaluate,
    expr_schema,
    expr_to_json,
    load_expr,
    parse_expr,
)
from swcalc.errors import ExpressionError
from swcalc.manifold import ExactSW, MaxOnlySW, c1_squared, homeo_compare, known_terms, quarter_characteristic

ROOT = Path(__file__).resolve().parent.parent
EXPRESSIONS = ROOT / "expressions"


def _load(name):
    return eval_expr(load_expr(EXPRESSIONS / name))


@pytest.mark.parametrize("path", sorted(EXPRESSIONS.glob("*.json")), ids=lambda p: p.stem)
def test_corpus_evaluates(path):
    m = eval_expr(load_expr(path))
    assert m.e + m.sign == 4 * quarter_characteristic(m)


def test_model_and_explicit_fiber_sum_agree():
    model = _load("z_m3_g1.json")
    summed = _load("z_h3_fiber_sum.json")
    assert summed.name == model.name == "Z(3,1)"
    assert isinstance(model.sw, ExactSW)
    assert isinstance(summed.sw, MaxOnlySW)
    assert known_terms(summed.sw) == known_terms(model.sw)
    assert (quarter_characteristic(summed), c1_squared(summed)) == (24, 48)


def test_unknot_surgery_returns_base():
    m = _load("unknot_surgery.json")
    assert m.name == "E(2)"


def test_custom_knot_on_k3():
    m = _load("k3_custom_knot.json")
    assert m.surface("C").genus == 3
    assert len(known_terms(m.sw).terms) == 5


def test_z_and_zprime_corpus_pair():
    z = _load("z_e3_g2.json")
    zp = _load("zprime_e3_g2.json")
    assert homeo_compare(z, zp).verdict == "homeomorphic"
    assert not zp.sw.rim_torus_ambiguous
    surgered = _load("zprime_m2.json")
    assert surgered.provenance.surgeries == [2]
    assert homeo_compare(surgered, zp).verdict == "homeomorphic"


def test_y3_corpus_entry():
    m = _load("y3_trefoil_fig8.json")
    assert (quarter_characteristic(m), c1_squared(m)) == (6, 16)


def test_parse_builds_typed_nodes():
    expr = parse_expr(json.loads((EXPRESSIONS / "zprime_m2.json").read_text()))
    assert isinstance(expr, TorusSurgeryNode)
    assert isinstance(expr.child, ModelNode)
    assert expr.m_vector == [2]
    assert isinstance(parse_expr((EXPRESSIONS / "z_e3_g2.json").read_text()), FiberSumNode)


def test_json_round_trip_is_stable():
    expr = load_expr(EXPRESSIONS / "zprime_e3_g2.json")
    text = expr_to_json(expr)
    assert expr_to_json(parse_expr(text)) == text


def test_schema_structure():
    generated = expr_schema()
    shipped = json.loads((ROOT / "schema" / "manifold-expr.json").read_text())
    for schema in (generated, shipped):
        assert schema["title"] == "ManifoldExpr"
        assert schema["discriminator"]["propertyName"] == "op"
        assert {"ModelNode", "KnotSurgeryNode", "FiberSumNode", "TorusSurgeryNode"} <= set(schema["$defs"])
    assert set(generated["$defs"]) == set(shipped["$defs"])


@pytest.mark.parametrize(
    "data,path",
    [
        ({"op": "twist"}, "$"),
        ({"op": "torus_surgery", "child": {"op": "model", "name": "E"}, "m_vector": [1], "bogus": 1}, "$.bogus"),
        ({"op": "knot_surgery", "child": {"op": "model", "name": "K3", "bogus": 0}, "torus_label": "F", "knot": "trefoil"}, "$.child.bogus"),
    ],
)
def test_parse_errors_carry_paths(data, path):
    with pytest.raises(ExpressionError) as info:
        parse_expr(data)
    assert info.value.path == path


def test_invalid_json_text():
    with pytest.raises(ExpressionError, match="invalid JSON"):
        parse_expr("{not json")


def test_missing_file():
    with pytest.raises(ExpressionError, match="cannot read"):
        load_expr(EXPRESSIONS / "missing.json")


@pytest.mark.parametrize(
    "data,path,match",
    [
        ({"op": "model", "name": "Q"}, "$", "unknown model"),
        ({"op": "model", "name": "E", "params": {}}, "$", "missing parameter"),
        ({"op": "model", "name": "E", "params": {"n": "two"}}, "$", "must be an integer"),
        (
            {
                "op": "fiber_sum",
                "left": {"op": "model", "name": "E", "params": {"n": 2}},
                "left_surface": "T",
                "right": {"op": "model", "name": "Y", "params": {"n": 0, "g": 2}},
                "right_surface": "S",
            },
            "$.right",
            "n >= 2",
        ),
        (
            {"op": "knot_surgery", "child": {"op": "model", "name": "E", "params": {"n": 2}}, "torus_label": "T", "knot": "5_2"},
            "$",
            "unknown knot",
        ),
        (
            {"op": "torus_surgery", "child": {"op": "model", "name": "E", "params": {"n": 2}}, "m_vector": [1]},
            "$",
            "complementarity",
        ),
    ],
)
def test_evaluation_errors_carry_paths(data, path, match):
    with pytest.raises(ExpressionError, match=match) as info:
        evaluate(data)
    assert info.value.path == path


def test_evaluation_matches_direct_builder():
    m = evaluate({"op": "model", "name": "Zmg", "params": {"m": 2, "g": 3}})
    assert m.model_dump_json() == build_Zmg(2, 3).model_dump_json()
