"""
Application Configuration
=========================

Using Pydantic Settings for configuration management.
Supports .env files and environment variables (prefix ``TORICBRAUER_``);
command line flags override whatever is configured here.
"""

from functools import lru_cache
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="TORICBRAUER_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Output
    output_format: Literal["text", "structured"] = "text"
    json_indent: int = 2

    # Fan input
    normalize_rays: bool = False

    # Diagnostics
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"
    verify_transforms: bool = False


@lru_cache()
def get_settings() -> Settings:
    """Get settings instance (cached)."""
    return Settings()


settings = get_settings()
