"""MCP tool for the spin geography scan of ``Z(m, g)``."""

from __future__ import annotations

import time
from typing import Any, Dict

from ..geography import geography_scan
from ..mcp_instance import tool
from .utils import log_mcp_tool


@tool()
def geography_table(m_min: int = 1, m_max: int = 6, g_min: int = 1, g_max: int = 8) -> Dict[str, Any]:
    """Scan Z(m, g) = Z(H(m), C, g) for complex structures excluded by spin geography.

    Z(m, g) is spin with chi = 8m + g - 1 and c1^2 = 16m + 8g - 8. It is
    "restricted" (symplectic but not complex) when its numbers fall in
    2 chi <= c1^2 < 3(chi - 5) without meeting either exceptional equation.
    Each row also carries the closed-form prediction g < 8m/5 - 2 with
    g != m - 1 (mod 3) and whether the two agree.

    Args:
        m_min, m_max: Inclusive range of Horikawa indices m.
        g_min, g_max: Inclusive range of knot genera g.

    Returns:
        {
          "count": <int>,
          "rows": [
            {"m": <int>, "g": <int>, "chi": <int>, "c1sq": <int>,
             "verdict": "not_in_range" | "exception_A" | "exception_B" | "excluded",
             "restricted": <bool>, "closed_form": <bool>, "agree": <bool>},
            ...
          ]
        }

    Example:
        geography_table(m_min=3, m_max=3, g_min=1, g_max=2)
        {"count": 2, "rows": [{"m": 3, "g": 1, "chi": 24, "c1sq": 48, "verdict": "excluded", ...},
                              {"m": 3, "g": 2, "chi": 25, "c1sq": 56, "verdict": "exception_B", ...}]}
    """
    start_time = time.time()
    log_mcp_tool("geography_table", "called", {"m_min": m_min, "m_max": m_max, "g_min": g_min, "g_max": g_max})

    rows = [r.model_dump() for r in geography_scan(range(m_min, m_max + 1), range(g_min, g_max + 1))]

    duration = time.time() - start_time
    log_mcp_tool("geography_table", "completed", {"count": len(rows)}, duration)
    return {"count": len(rows), "rows": rows}
