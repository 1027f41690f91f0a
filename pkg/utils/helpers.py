"""
Helpers & Utilities
===================
Shared utility functions used across the engine.
"""

import logging
import sys
import time

from config.settings import settings


# ── Logging ───────────────────────────────────────────────
def setup_logger(name: str = "kplex", level: int | str = logging.INFO) -> logging.Logger:
    """
    Create and configure a logger with console output.

    Records go to stderr; stdout is reserved for plex output.
    """
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(
            logging.Formatter(
                "[%(asctime)s] %(levelname)s %(name)s — %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
        )
        logger.addHandler(handler)
    logger.setLevel(level)
    return logger


logger = setup_logger(level=settings.LOG_LEVEL.upper())


# ── Timing ────────────────────────────────────────────────
class Stopwatch:
    """Monotonic wall-clock timer reporting milliseconds."""

    def __init__(self) -> None:
        self._start = time.perf_counter()

    @property
    def elapsed_ms(self) -> int:
        return int((time.perf_counter() - self._start) * 1000)
