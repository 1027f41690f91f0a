"""
Application Settings
====================
Loads engine defaults from environment variables / .env file.
"""

from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Central configuration sourced from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="KPLEX_",
        extra="ignore",
    )

    # ── Scheduler ─────────────────────────────────────────
    DEFAULT_THREADS: int = 1
    SPLIT_THRESHOLD: int = 10
    BACKEND: Literal["thread", "process"] = "thread"
    IDLE_POLL_SECONDS: float = 0.005

    # ── Output ────────────────────────────────────────────
    WRITE_BUFFER_BYTES: int = 1 << 20
    LOG_LEVEL: str = "WARNING"

    # ── Testing / oracle ──────────────────────────────────
    ORACLE_MAX_VERTICES: int = 22
    DATA_DIR: Path = Path("data")


settings = Settings()
