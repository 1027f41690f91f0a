"""
Run Schemas
===========
Pydantic models for graph statistics, run configuration and run results.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.settings import settings


def min_large_size(k: int) -> int:
    """Smallest admissible lower bound l for large-plex listing (2k−1)."""
    return 2 * k - 1


# ── Graph statistics ──────────────────────────────────────
class GraphStats(BaseModel):
    """Basic sparsity statistics of a graph."""

    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    max_degree: int
    degeneracy: int

    def line(self) -> str:
        return f"n={self.n} m={self.m} max_degree={self.max_degree} degeneracy={self.degeneracy}"


# ── Run configuration ─────────────────────────────────────
class RunConfig(BaseModel):
    """Parameters of one listing run."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)
    l: int = Field(default=0, ge=0)  # 0 lists every maximal k-plex
    threads: int = Field(default_factory=lambda: settings.DEFAULT_THREADS, ge=1)
    split_threshold: int = Field(default_factory=lambda: settings.SPLIT_THRESHOLD, ge=1)
    prune1: bool = True
    prune2: bool = True
    count_only: bool = False
    backend: Literal["thread", "process"] = Field(default_factory=lambda: settings.BACKEND)

    @model_validator(mode="after")
    def _check_size_bound(self) -> "RunConfig":
        bound = min_large_size(self.k)
        if 0 < self.l < bound:
            raise ValueError(f"min size l={self.l} violates l >= 2k-1 = {bound} for k={self.k}")
        return self

    @property
    def large_mode(self) -> bool:
        return self.l > 0

    @property
    def emit_floor(self) -> int:
        """Smallest plex Part II may emit."""
        return max(self.l, min_large_size(self.k))


# ── Results ───────────────────────────────────────────────
class RunSummary(BaseModel):
    """Totals reported when a run completes."""

    plexes: int = 0
    max_size: int = 0
    elapsed_ms: int = 0
    seed_sets: int = 0

    def line(self) -> str:
        return f"plexes={self.plexes} max_size={self.max_size} elapsed_ms={self.elapsed_ms}"


class OracleResult(BaseModel):
    """Brute-force answer: every qualifying plex as a sorted tuple of internal IDs."""

    model_config = ConfigDict(frozen=True)

    plexes: frozenset[tuple[int, ...]]
    count: int

    @model_validator(mode="after")
    def _check_count(self) -> "OracleResult":
        if self.count != len(self.plexes):
            raise ValueError("count does not match the number of plexes")
        return self
