"""
MCP Server implementation for swcalc

This module is the entrypoint used when running the MCP server process.
It imports the shared `mcp` instance and all MCP tools so they are
registered on the same FastMCP server.
"""

from __future__ import annotations

import structlog

from .logs import configure_logging
from .mcp_instance import config, mcp  # shared FastMCP instance

# Import tools so their @tool decorators run and register them on `mcp`.
from .tools import basic_classes as basic_classes_tools  # noqa: F401
from .tools import demo as demo_tools  # noqa: F401
from .tools import geography as geography_tools  # noqa: F401
from .tools import lefschetz as lefschetz_tools  # noqa: F401
from .tools import manifolds as manifold_tools  # noqa: F401

logger = structlog.get_logger(__name__)


def main() -> None:
    """Main entry point for the MCP server."""
    configure_logging(config)
    logger.info("Starting swcalc MCP server", host=config.mcp_host, port=config.mcp_port, path=config.mcp_path)
    # Run the shared FastMCP instance; this will block the current process.
    mcp.run(transport="streamable-http")


if __name__ == "__main__":
    main()
