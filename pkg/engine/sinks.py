"""
Plex Sinks
==========
Receivers for emitted plexes. Emissions may arrive from any worker thread, so
every sink serializes internally.
"""

from __future__ import annotations

import threading
from collections.abc import Sequence
from typing import Protocol, TextIO

import numpy as np

from config.settings import settings


class PlexSink(Protocol):
    """Anything that accepts maximal k-plexes given as internal vertex IDs."""

    count: int
    max_size: int

    def accept(self, plex: Sequence[int]) -> None: ...


class CountingSink:
    """Counts plexes and tracks the largest one."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.count = 0
        self.max_size = 0

    def accept(self, plex: Sequence[int]) -> None:
        with self._lock:
            self._record(plex)

    def _record(self, plex: Sequence[int]) -> None:
        self.count += 1
        if len(plex) > self.max_size:
            self.max_size = len(plex)


class CollectingSink(CountingSink):
    """Keeps every plex in canonical form (ascending tuple) and notes repeats."""

    def __init__(self) -> None:
        super().__init__()
        self.plexes: set[tuple[int, ...]] = set()
        self.duplicates = 0

    def _record(self, plex: Sequence[int]) -> None:
        super()._record(plex)
        key = tuple(sorted(plex))
        if key in self.plexes:
            self.duplicates += 1
        self.plexes.add(key)


class BufferingSink(CountingSink):
    """Keeps every emission in arrival order, repeats included."""

    def __init__(self) -> None:
        super().__init__()
        self.rows: list[tuple[int, ...]] = []

    def _record(self, plex: Sequence[int]) -> None:
        super()._record(plex)
        self.rows.append(tuple(sorted(plex)))


class WriterSink(CountingSink):
    """
    Writes one plex per line as ascending external labels.

    Lines are buffered and flushed in blocks of roughly ``buffer_bytes``; with
    ``sorted_output`` everything is held until ``close`` and written in
    ascending order, so output is byte-identical across thread counts.
    """

    def __init__(
        self,
        stream: TextIO,
        labels: np.ndarray,
        sorted_output: bool = False,
        buffer_bytes: int | None = None,
    ) -> None:
        super().__init__()
        self._stream = stream
        self._labels = labels
        self._sorted = sorted_output
        self._buffer_bytes = buffer_bytes or settings.WRITE_BUFFER_BYTES
        self._pending: list[str] = []
        self._pending_bytes = 0
        self._held: list[tuple[int, ...]] = []

    def _record(self, plex: Sequence[int]) -> None:
        super()._record(plex)
        row = tuple(sorted(int(self._labels[v]) for v in plex))
        if self._sorted:
            self._held.append(row)
            return
        line = " ".join(map(str, row)) + "\n"
        self._pending.append(line)
        self._pending_bytes += len(line)
        if self._pending_bytes >= self._buffer_bytes:
            self._flush()

    def _flush(self) -> None:
        if self._pending:
            self._stream.write("".join(self._pending))
            self._pending.clear()
            self._pending_bytes = 0

    def close(self) -> None:
        with self._lock:
            if self._sorted:
                self._held.sort()
                for row in self._held:
                    self._pending.append(" ".join(map(str, row)) + "\n")
                self._held.clear()
            self._flush()
            self._stream.flush()
