"""
Errors
======
Exception hierarchy shared by ingest, the engine and the CLI.
"""

from pathlib import Path


class KPlexError(Exception):
    """Base class for every error raised by the engine."""


class EdgeListParseError(KPlexError, ValueError):
    """An edge-list line could not be turned into a vertex pair."""

    def __init__(self, detail: str, line_no: int, path: Path | str | None = None) -> None:
        self.detail = detail
        self.line_no = line_no
        self.path = path
        where = f"{path}:{line_no}" if path is not None else f"line {line_no}"
        super().__init__(f"{where}: {detail}")

    def with_path(self, path: Path | str) -> "EdgeListParseError":
        return EdgeListParseError(self.detail, self.line_no, path)


class GraphLoadError(KPlexError):
    """The edge-list file could not be read."""

    def __init__(self, path: Path | str, reason: str) -> None:
        self.path = path
        super().__init__(f"cannot read graph from {path}: {reason}")


class ConfigurationError(KPlexError, ValueError):
    """A run configuration violates its invariants."""


class OracleTooLargeError(KPlexError, ValueError):
    """The brute-force oracle refuses graphs above its vertex limit."""
