"""MCP tool for basic-class enumeration on built-in adjunction scenarios."""

from __future__ import annotations

import time
from typing import Any, Dict, Optional

from ..basic_classes import Candidates, enumerate_candidates, scenario_by_name
from ..mcp_instance import config, tool
from .utils import log_mcp_tool


@tool()
def basic_class_candidates(builtin: str, params: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Enumerate the classes allowed as SW basic classes by adjunction and simple type.

    Built-in scenarios:
      - "Y2g", params {"g": <int>}: Y(2, g) in the basis tau, Sigma, R_i, V_i.
      - "Y", params {"n": <int>, "g": <int>}: Y(n, g) with its junction lattice.
      - "Yprime_neg1", params {"g": <int>, "L": [<int>, ...]}: Y'(1, g, L) after
        -1 surgery, with the genus g - 1 surface Gamma adjoined.

    The candidate set is exact and closed under negation; it only constrains
    the support, never the coefficients.

    Args:
        builtin: Scenario name.
        params: Scenario parameters.

    Returns:
        {"scenario": <str>, "status": "candidates", "count": <int>, "candidates": [<class text>, ...]}
        or {"scenario": <str>, "status": "vanishes", "reason": <str>}

    Example:
        basic_class_candidates("Y2g", {"g": 3})
        {"scenario": "Y(2,3)", "status": "candidates", "count": 2,
         "candidates": ["-4*tau - 2*Sigma", "4*tau + 2*Sigma"]}
    """
    start_time = time.time()
    log_mcp_tool("basic_class_candidates", "called", {"builtin": builtin, "params": params})

    scenario = scenario_by_name(builtin, params or {})
    result = enumerate_candidates(scenario, limit=config.enumeration_limit)
    if isinstance(result, Candidates):
        described = result.describe(scenario.lattice)
        out: Dict[str, Any] = {
            "scenario": scenario.name,
            "status": "candidates",
            "count": len(described),
            "candidates": described,
        }
    else:
        out = {"scenario": scenario.name, "status": "vanishes", "reason": result.reason}

    duration = time.time() - start_time
    log_mcp_tool("basic_class_candidates", "completed", {"status": out["status"]}, duration)
    return out
