"""MCP tools that evaluate manifold expressions and report on the resulting records.

An expression is a JSON object with an ``op`` field:

    {"op": "model", "name": "Zmg", "params": {"m": 3, "g": 1}}
    {"op": "knot_surgery", "child": <expr>, "torus_label": "T", "knot": "trefoil"}
    {"op": "fiber_sum", "left": <expr>, "left_surface": "C",
     "right": <expr>, "right_surface": "S", "options": {"complementary": true}}
    {"op": "torus_surgery", "child": <expr>, "m_vector": [2]}
"""

from __future__ import annotations

import json
import time
from typing import Any, Dict

from ..manifold import characteristic_numbers as numbers_of
from ..manifold import homeo_compare, render_sw, taubes_symplectic_check
from ..mcp_instance import tool
from .utils import log_mcp_tool, manifold_from


@tool()
def evaluate_expression(expr: Dict[str, Any]) -> Dict[str, Any]:
    """Evaluate a manifold expression and return its full invariant record.

    Use this tool when:
      - You need the Euler number, signature, flags, tracked homology lattice,
        canonical class, tracked surfaces and SW invariant of a construction.

    Args:
        expr: Manifold expression tree (see module docstring for node shapes).
            Named models: E(n), EK(n, knot), H(m), K3, K3K(knot), S1xMK(knot),
            Y(n, g), Yprime(g, L), Zmg(m, g), Z_K3(knot, g), Zprime_E(g, L),
            Y3(n, K1, K2). Knots are names ("trefoil", "figure-eight", "T(2,5)",
            "K_3") or {"name": ..., "alexander": {"1": -1, "0": 3, "-1": -1}}.

    Returns:
        A JSON-serializable dict:
            {
              "manifold": <FourManifold record>,
              "sw_text": <str>,
            }

    Example:
        evaluate_expression({"op": "model", "name": "Zmg", "params": {"m": 3, "g": 1}})
        {
          "manifold": {"name": "Z(3,1)", "e": 240, "sign": -144, "spin": "yes", ...},
          "sw_text": <t_eps + t_eps^-1 in the tracked basis>
        }
    """
    start_time = time.time()
    log_mcp_tool("evaluate_expression", "called", {"expr": expr})

    m = manifold_from(expr)
    result = {"manifold": json.loads(m.to_json()), "sw_text": render_sw(m.sw)}

    duration = time.time() - start_time
    log_mcp_tool("evaluate_expression", "completed", {"name": m.name, "sw_kind": m.sw.kind}, duration)
    return result


@tool()
def characteristic_numbers(expr: Dict[str, Any]) -> Dict[str, Any]:
    """Return e, sign, chi = (e + sign)/4, c1^2 = 2e + 3 sign, b1 and b2+/- of an expression.

    Args:
        expr: Manifold expression tree.

    Returns:
        {"name": <str>, "e": <int>, "sign": <int>, "chi": <int>, "c1_squared": <int>,
         "b1": <int | None>, "b2_plus": <int | None>, "b2_minus": <int | None>}

    Example:
        characteristic_numbers({"op": "model", "name": "H", "params": {"m": 1}})
        {"name": "H(1)", "e": 76, "sign": -48, "chi": 7, "c1_squared": 8, ...}
    """
    start_time = time.time()
    log_mcp_tool("characteristic_numbers", "called", {"expr": expr})

    result = numbers_of(manifold_from(expr))

    duration = time.time() - start_time
    log_mcp_tool("characteristic_numbers", "completed", {"name": result["name"]}, duration)
    return result


@tool()
def compare_homeomorphism(expr_a: Dict[str, Any], expr_b: Dict[str, Any]) -> Dict[str, Any]:
    """Decide whether two simply connected manifolds are homeomorphic.

    The verdict compares (e, sign, parity) and is "homeomorphic" only when
    both records assert pi_1 = 1 and the intersection forms are indefinite;
    "distinct" when a number differs; "undecidable" otherwise. Diffeomorphism
    is never decided by this tool.

    Args:
        expr_a: First manifold expression.
        expr_b: Second manifold expression.

    Returns:
        {"verdict": "homeomorphic" | "distinct" | "undecidable",
         "left": [e, sign, parity], "right": [e, sign, parity], "notes": [<str>, ...]}
    """
    start_time = time.time()
    log_mcp_tool("compare_homeomorphism", "called", {"expr_a": expr_a, "expr_b": expr_b})

    a = manifold_from(expr_a)
    b = manifold_from(expr_b)
    verdict = homeo_compare(a, b)
    result = {"left_name": a.name, "right_name": b.name, **verdict.model_dump()}

    duration = time.time() - start_time
    log_mcp_tool("compare_homeomorphism", "completed", {"verdict": verdict.verdict}, duration)
    return result


@tool()
def symplectic_obstruction(expr: Dict[str, Any]) -> Dict[str, Any]:
    """Check the SW invariant of an expression against Taubes' constraints.

    A symplectic manifold with b2+ > 1 has SW(K) = +/-1 at its canonical
    class. "obstructed" means no symplectic structure has the recorded
    canonical class.

    Args:
        expr: Manifold expression tree.

    Returns:
        {"name": <str>, "verdict": "consistent" | "obstructed" | "inapplicable",
         "reason": <str>, "coefficient": <int | None>}

    Example:
        symplectic_obstruction({"op": "torus_surgery",
                                "child": {"op": "model", "name": "Zprime_E", "params": {"g": 2, "L": [1]}},
                                "m_vector": [2]})
        {"verdict": "obstructed", "coefficient": 3, ...}
    """
    start_time = time.time()
    log_mcp_tool("symplectic_obstruction", "called", {"expr": expr})

    m = manifold_from(expr)
    verdict = taubes_symplectic_check(m)
    result = {"name": m.name, **verdict.model_dump()}

    duration = time.time() - start_time
    log_mcp_tool("symplectic_obstruction", "completed", {"verdict": verdict.verdict}, duration)
    return result
