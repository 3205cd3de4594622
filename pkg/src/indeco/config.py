"""
Application configuration using Pydantic Settings.

All configuration is loaded from environment variables prefixed with
``INDECO_`` (for example ``INDECO_MAX_N``) with sensible defaults.
"""

from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogFormat(str, Enum):
    """Log renderer selection."""

    CONSOLE = "console"
    JSON = "json"


class Settings(BaseSettings):
    """
    Application settings with validation.

    Prefix: INDECO_
    """

    model_config = SettingsConfigDict(
        env_prefix="INDECO_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # =========================================================================
    # Application
    # =========================================================================
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="WARNING")
    log_format: LogFormat = Field(default=LogFormat.CONSOLE)

    # =========================================================================
    # Enumeration bounds
    # =========================================================================
    max_n: int = Field(
        default=8,
        ge=1,
        le=9,
        description="Upper cap for every enumeration bound requested on the CLI",
    )
    oracle_max_n: int = Field(
        default=12,
        ge=1,
        le=16,
        description="Largest poset accepted by the 2^n subset oracle",
    )
    canonical_max_n: int = Field(
        default=10,
        ge=1,
        le=12,
        description="Largest poset accepted by canonical_form",
    )

    # =========================================================================
    # Execution
    # =========================================================================
    jobs: int = Field(default=1, ge=1, le=256, description="Default worker count")
    cache_dir: Path | None = Field(
        default=None,
        description="Directory for the on-disk enumeration cache (disabled if unset)",
    )

    @field_validator("cache_dir", mode="before")
    @classmethod
    def empty_cache_dir_is_none(cls, v: object) -> object:
        """Treat an empty env value as 'cache disabled'."""
        if isinstance(v, str) and not v.strip():
            return None
        return v


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Uses lru_cache to ensure settings are only loaded once.
    """
    return Settings()


# Convenience alias
settings = get_settings()
