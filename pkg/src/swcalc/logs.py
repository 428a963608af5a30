"""structlog wiring shared by the CLI and the MCP server."""

from __future__ import annotations

import logging
import sys
from typing import Optional

import structlog

from .config import Config


def configure_logging(config: Optional[Config] = None) -> None:
    """Route structlog events through stdlib logging at the configured level.

    The MCP server writes to ``config.log_file`` when set (stdout belongs to
    the transport); the CLI logs to stderr so JSON output stays clean.
    """
    config = config or Config()
    level = logging.getLevelName(config.log_level.upper())
    if not isinstance(level, int):
        level = logging.INFO

    handlers: list[logging.Handler]
    if config.log_file is not None:
        handlers = [logging.FileHandler(config.log_file)]
    else:
        handlers = [logging.StreamHandler(sys.stderr)]
    logging.basicConfig(level=level, handlers=handlers, format="%(message)s", force=True)

    renderer = (
        structlog.processors.JSONRenderer()
        if config.log_format == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            renderer,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
