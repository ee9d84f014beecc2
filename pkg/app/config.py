"""
Application configuration using pydantic-settings
"""
from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

PROJECT_ROOT = Path(__file__).resolve().parents[1]


class Settings(BaseSettings):
    """Engine settings loaded from environment variables (prefix CGA_VERMA_)"""

    model_config = SettingsConfigDict(
        # Resolve relative to project root so the CLI can be started from any CWD.
        env_file=str(PROJECT_ROOT / ".env"),
        env_file_encoding="utf-8",
        env_prefix="CGA_VERMA_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "cga-verma"
    app_version: str = "1.0.0"

    # Observability
    log_level: str = "WARNING"
    log_format: str = "text"  # "text" or "json"
    log_file: Optional[str] = None  # Rotating file log in addition to stderr

    # Grid evaluation
    threads: int = 4  # CGA_VERMA_THREADS caps worker threads for grid runs
    default_pmax: int = 6
    default_qmax: int = 3

    # PBW engine
    memo_enabled: bool = True  # Cache one-step reorderings per module instance

    @field_validator("threads")
    @classmethod
    def threads_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("threads must be >= 1")
        return v

    @field_validator("log_format")
    @classmethod
    def known_log_format(cls, v: str) -> str:
        v = v.lower()
        if v not in {"text", "json"}:
            raise ValueError("log_format must be 'text' or 'json'")
        return v


# Global settings instance
settings = Settings()


@lru_cache
def get_settings() -> Settings:
    return Settings()
