"""MCP tool for the Lefschetz fibration counts."""

from __future__ import annotations

import time
from typing import Any, Dict

from ..lefschetz import enk_fibration, mng_fibration, singular_fiber_model, twisted_fiber_sum_check, vanishing_cycle_audit
from ..mcp_instance import tool
from .utils import log_mcp_tool


@tool()
def lefschetz_report(n: int, g: int, audit: bool = False) -> Dict[str, Any]:
    """Fibration bookkeeping for E(n)_K (K fibered of genus g) and its halves M(n, g).

    Reports the genus 2g + n - 1 fibration on E(n)_K (16n + 8g - 8 Lefschetz
    fibers, e = 12n), the fibration on M(n, g) = (S^2 x Sigma_g) # 4n CP2-bar,
    the model singular fiber and the twisted fiber sum check
    M(n, g) #_Phi M(n, g) against (e, sign) = (12n, -8n). The last is a
    numerical consistency check, not an identification.

    Args:
        n: Elliptic index, n >= 1.
        g: Knot genus, g >= 1.
        audit: Also split the vanishing cycles into the E(n) part and the
            2g extra cycles per singular fiber (needs n >= 2).

    Returns:
        {"enk_fibration": {...}, "mng_fibration": {...}, "singular_fiber_model": {...},
         "twisted_fiber_sum": {...}, "vanishing_cycle_audit": {...} (when audit)}
    """
    start_time = time.time()
    log_mcp_tool("lefschetz_report", "called", {"n": n, "g": g, "audit": audit})

    result: Dict[str, Any] = {
        "enk_fibration": enk_fibration(n, g).model_dump(),
        "mng_fibration": mng_fibration(n, g).model_dump(),
        "singular_fiber_model": singular_fiber_model(n, g).model_dump(),
        "twisted_fiber_sum": twisted_fiber_sum_check(n, g).model_dump(),
    }
    if audit:
        result["vanishing_cycle_audit"] = vanishing_cycle_audit(n, g).model_dump()

    duration = time.time() - start_time
    log_mcp_tool("lefschetz_report", "completed", {"verdict": result["twisted_fiber_sum"]["verdict"]}, duration)
    return result
