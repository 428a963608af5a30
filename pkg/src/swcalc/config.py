"""Configuration management for the swcalc engine, CLI and MCP server.

Loads configuration from environment variables and an optional .env file
in the project root.

Example .env:

    SWCALC_EXAMPLES=expressions
    LOG_LEVEL=INFO
    LOG_FORMAT=console
    SWCALC_MCP_PORT=8000
"""

from pathlib import Path
from typing import Literal, Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Config(BaseSettings):
    """Application configuration loaded from environment / .env file.

    We use explicit aliases so the mapping to env vars is obvious and
    easy to consume from scripts. Nothing here changes a computed
    invariant; settings only steer I/O, logging and resource limits.
    """

    # Expression corpus
    examples_dir: Path = Field(
        Path("expressions"),
        alias="SWCALC_EXAMPLES",
        description="Directory holding manifold-expression JSON files",
    )

    # Logging
    log_level: str = Field(
        "INFO",
        alias="LOG_LEVEL",
        description="Log level for server / CLI (e.g. DEBUG, INFO, WARN, ERROR)",
    )
    log_format: Literal["console", "json"] = Field(
        "console",
        alias="LOG_FORMAT",
        description="Render log events for humans (console) or machines (json)",
    )
    log_file: Optional[Path] = Field(
        None,
        alias="SWCALC_LOG_FILE",
        description="Optional file the MCP server writes its log to",
    )

    # MCP server configuration
    mcp_host: str = Field("0.0.0.0", alias="SWCALC_MCP_HOST")
    mcp_port: int = Field(8000, alias="SWCALC_MCP_PORT")
    mcp_path: str = Field("/", alias="SWCALC_MCP_PATH")

    # Engine limits
    enumeration_limit: int = Field(
        2_000_000,
        alias="SWCALC_ENUMERATION_LIMIT",
        description="Maximum lattice points scanned by basic-class enumeration",
    )

    # Pydantic v2 settings for env loading
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,  # we use explicit aliases, so keep env lookup strict
        extra="ignore",
        populate_by_name=False,
    )
