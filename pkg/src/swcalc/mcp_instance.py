"""Shared MCP server wiring for swcalc tools.

All MCP tools and the server entrypoint must import and use this module
so that there is exactly one FastMCP instance and one Config per process.
"""

from mcp.server.fastmcp import FastMCP

from .config import Config

config = Config()

# Single shared MCP server instance
mcp = FastMCP(
    "swcalc",
    host=config.mcp_host,
    port=config.mcp_port,
    streamable_http_path=config.mcp_path,
    instructions=(
        "Symbolic Seiberg-Witten calculus on closed 4-manifolds. Manifolds are given as JSON "
        "expression trees of named models (E, H, K3, Y, Yprime, ...) combined by knot_surgery, "
        "fiber_sum and torus_surgery nodes. Tools return characteristic numbers, SW invariants "
        "as Laurent polynomials in H_2, homeomorphism and symplectic verdicts, and geography tables."
    ),
)

# Convenience alias for defining tools bound to this server
tool = mcp.tool

__all__ = [
    "mcp",
    "tool",
    "config",
]
