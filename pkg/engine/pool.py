"""
Work-Stealing Pool
==================
Fixed set of worker threads, each owning a deque. Tasks submitted from a
worker go to its own deque and are popped LIFO; idle workers first drain the
shared FIFO injector (where the caller seeds the initial tasks) and then steal
FIFO from their peers.
"""

from __future__ import annotations

import threading
from collections import deque
from collections.abc import Callable

from config.settings import settings
from utils.helpers import logger

Task = Callable[[], None]


class WorkStealingPool:
    """Single-use pool: submit initial tasks, then ``run`` until all work is done."""

    def __init__(self, workers: int, poll_seconds: float | None = None, name: str = "kplex-worker") -> None:
        if workers < 1:
            raise ValueError("a pool needs at least one worker")
        self.workers = workers
        self._name = name
        self._poll = poll_seconds or settings.IDLE_POLL_SECONDS
        self._local: list[deque[Task]] = [deque() for _ in range(workers)]
        self._injector: deque[Task] = deque()
        self._cv = threading.Condition()
        self._pending = 0
        self._idle = 0
        self._executed = 0
        self._error: BaseException | None = None
        self._tls = threading.local()

    # ── introspection ─────────────────────────────────────
    def worker_index(self) -> int:
        """Index of the calling worker; 0 outside the pool."""
        return getattr(self._tls, "index", 0)

    def idle_workers(self) -> int:
        return self._idle

    @property
    def executed(self) -> int:
        return self._executed

    # ── submission ────────────────────────────────────────
    def submit(self, task: Task) -> None:
        index = getattr(self._tls, "index", None)
        with self._cv:
            self._pending += 1
            if index is None:
                self._injector.append(task)
            else:
                self._local[index].append(task)
            self._cv.notify()

    # ── execution ─────────────────────────────────────────
    def run(self) -> None:
        threads = [
            threading.Thread(target=self._work, args=(i,), name=f"{self._name}-{i}", daemon=True)
            for i in range(self.workers)
        ]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        if self._error is not None:
            raise self._error

    def _next_task(self, index: int) -> Task | None:
        try:
            return self._local[index].pop()
        except IndexError:
            pass
        try:
            return self._injector.popleft()
        except IndexError:
            pass
        for offset in range(1, self.workers):
            try:
                return self._local[(index + offset) % self.workers].popleft()
            except IndexError:
                continue
        return None

    def _work(self, index: int) -> None:
        self._tls.index = index
        while True:
            task = self._next_task(index)
            if task is None:
                with self._cv:
                    if self._pending == 0:
                        self._cv.notify_all()
                        return
                    self._idle += 1
                    self._cv.wait(self._poll)
                    self._idle -= 1
                continue
            try:
                if self._error is None:
                    task()
            except BaseException as exc:
                with self._cv:
                    if self._error is None:
                        logger.error("Worker %d failed: %s", index, exc)
                        self._error = exc
            finally:
                with self._cv:
                    self._pending -= 1
                    self._executed += 1
                    if self._pending == 0:
                        self._cv.notify_all()
