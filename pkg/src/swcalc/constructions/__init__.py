"""Constructions: knot surgery, fiber sums, torus surgeries and the named families."""

from .builders import (
    build_En,
    build_EnK,
    build_Horikawa,
    build_K3,
    build_K3_knot,
    build_S1xMK,
    build_Y,
    build_Y3,
    build_Yprime,
    build_Z,
    build_Z_k3,
    build_Zmg,
    build_Zprime,
    build_Zprime_En,
    build_Zprime_m,
    canonical_square,
    elliptic_complementarity,
    zprime_canonical,
)
from .closed_forms import y3_numbers, z_numbers, zmg_numbers, zprime_numbers
from .expr import (
    MODELS,
    FiberSumNode,
    KnotSurgeryNode,
    ManifoldExpr,
    ModelNode,
    TorusSurgeryNode,
    eval_expr,
    evaluate,
    expr_schema,
    expr_to_json,
    load_expr,
    parse_expr,
)
from .operations import (
    ComplementarityHypothesis,
    fiber_sum,
    knot_surgery,
    rim_tori_rank,
    surgery_formula,
    surgery_multiplier,
    torus_surgery,
    vanishing_relation,
)

__all__ = [
    "MODELS",
    "ComplementarityHypothesis",
    "FiberSumNode",
    "KnotSurgeryNode",
    "ManifoldExpr",
    "ModelNode",
    "TorusSurgeryNode",
    "build_En",
    "build_EnK",
    "build_Horikawa",
    "build_K3",
    "build_K3_knot",
    "build_S1xMK",
    "build_Y",
    "build_Y3",
    "build_Yprime",
    "build_Z",
    "build_Z_k3",
    "build_Zmg",
    "build_Zprime",
    "build_Zprime_En",
    "build_Zprime_m",
    "canonical_square",
    "elliptic_complementarity",
    "eval_expr",
    "evaluate",
    "expr_schema",
    "expr_to_json",
    "fiber_sum",
    "knot_surgery",
    "load_expr",
    "parse_expr",
    "rim_tori_rank",
    "surgery_formula",
    "surgery_multiplier",
    "torus_surgery",
    "vanishing_relation",
    "y3_numbers",
    "z_numbers",
    "zmg_numbers",
    "zprime_canonical",
    "zprime_numbers",
]
