"""MCP tool that runs a golden-check bundle."""

from __future__ import annotations

import time
from typing import Any, Dict

from ..demo import run_demo as run_section
from ..mcp_instance import tool
from .utils import log_mcp_tool


@tool()
def run_demo(section: str) -> Dict[str, Any]:
    """Run one bundle of golden checks and report each claim with expected and computed values.

    Sections: "construction1" (Y(n, g) and Z(m, g)), "geography",
    "construction2" (Z versus Z' homeomorphism), "surgery" (torus surgery
    multipliers and Taubes obstructions), "lefschetz", "construction3"
    (fiber sums of knot-surgered elliptic surfaces).

    Args:
        section: One of the section names above.

    Returns:
        {"section": <str>, "passed": <bool>,
         "checks": [{"claim": <str>, "expected": <str>, "computed": <str>, "passed": <bool>, "note": <str>}, ...]}
    """
    start_time = time.time()
    log_mcp_tool("run_demo", "called", {"section": section})

    report = run_section(section)
    result = {"section": report.section, "passed": report.passed, "checks": [c.model_dump() for c in report.checks]}

    duration = time.time() - start_time
    log_mcp_tool("run_demo", "completed", {"passed": report.passed, "checks": len(report.checks)}, duration)
    return result
