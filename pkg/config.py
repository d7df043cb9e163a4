"""Configuration loaded from the environment and an optional .env file."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from dotenv import load_dotenv


BASE_DIR = Path(__file__).parent

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _default_workers() -> int:
    return min(4, os.cpu_count() or 1)


def _int_var(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"{name} must be an integer, got {raw!r}. Fix it in your .env file:\n"
            f"  echo '{name}={default}' >> .env"
        ) from None
    if value < minimum:
        raise ValueError(f"{name} must be at least {minimum}, got {value}")
    return value


@dataclass
class AppConfig:
    workers: int = field(default_factory=_default_workers)
    search_cap: int = 200_000
    log_level: str = "WARNING"
    parallel_min: int = 4096

    @classmethod
    def load(cls, env_file: Path | None = None) -> AppConfig:
        load_dotenv(env_file or BASE_DIR / ".env")
        log_level = os.getenv("LQ_LOG_LEVEL", "WARNING").strip().upper() or "WARNING"
        if log_level not in LOG_LEVELS:
            raise ValueError(
                f"LQ_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {log_level!r}"
            )
        return cls(
            workers=_int_var("LQ_WORKERS", _default_workers(), 1),
            search_cap=_int_var("LQ_SEARCH_CAP", 200_000, 1),
            log_level=log_level,
            parallel_min=_int_var("LQ_PARALLEL_MIN", 4096, 0),
        )

    @property
    def logging_level(self) -> int:
        return getattr(logging, self.log_level)
