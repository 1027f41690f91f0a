"""
Scheduler
=========
Runs Part I (small plexes) and Part II (one task per anchor in η order)
either inline, on a work-stealing thread pool with subtask splitting, or on a
process pool.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from functools import partial

from pydantic import ValidationError

from core.graph import Graph
from core.ordering import DegeneracyOrder, NeighborhoodScratch, degeneracy_order
from engine.bkpivot import bkpivot_search
from engine.pool import WorkStealingPool
from engine.seeder import (
    build_bipartite,
    build_seed_graph,
    enum_seed_sets,
    globally_maximal,
    prune_seed_graph,
)
from engine.sinks import BufferingSink, PlexSink
from engine.smallplex import list_small_plexes
from schemas.run_schemas import RunConfig, RunSummary
from utils.errors import ConfigurationError
from utils.helpers import Stopwatch, logger


# ── Tallies ───────────────────────────────────────────────
@dataclass
class WorkerTally:
    """Counters owned by one worker; only that worker writes them."""

    plexes: int = 0
    max_size: int = 0
    seed_sets: int = 0


def count_reduce(partials: Iterable[WorkerTally]) -> WorkerTally:
    """Sum per-worker counters; max_size is the maximum."""
    total = WorkerTally()
    for part in partials:
        total.plexes += part.plexes
        total.seed_sets += part.seed_sets
        total.max_size = max(total.max_size, part.max_size)
    return total


class _TallyingSink:
    """Forwards to the caller's sink and bumps the calling worker's tally."""

    def __init__(self, sink: PlexSink, partials: Sequence[WorkerTally], worker: Callable[[], int]) -> None:
        self._sink = sink
        self._partials = partials
        self._worker = worker

    def accept(self, plex: Sequence[int]) -> None:
        tally = self._partials[self._worker()]
        tally.plexes += 1
        if len(plex) > tally.max_size:
            tally.max_size = len(plex)
        self._sink.accept(plex)


class _Splitter:
    """Hands a branch to the pool when it is wide enough and a worker is idle."""

    def __init__(self, pool: WorkStealingPool, threshold: int) -> None:
        self._pool = pool
        self._threshold = threshold

    def should_split(self, candidates: int) -> bool:
        return candidates > self._threshold and self._pool.idle_workers() > 0

    def spawn(self, task: Callable[[], None]) -> None:
        self._pool.submit(task)


# ── Part II, one anchor ───────────────────────────────────
def search_anchor(
    g: Graph,
    order: DegeneracyOrder,
    cfg: RunConfig,
    i: int,
    sink: PlexSink,
    scratch: NeighborhoodScratch | None = None,
    spawner: _Splitter | None = None,
) -> int:
    """List the maximal v_i-leaded plexes of size ≥ max(l, 2k−1); returns the seed sets searched."""
    k, l = cfg.k, cfg.l
    sg = build_seed_graph(g, order, i, scratch)
    if cfg.prune1:
        sg = prune_seed_graph(sg, k, l)
    if sg.live_count < cfg.emit_floor:
        return 0
    bv = build_bipartite(g, order, i, sg, scratch)
    check = partial(globally_maximal, sg=sg, bv=bv, k=k)
    searched = 0
    for seed in enum_seed_sets(sg, k, l, prune2=cfg.prune2):
        searched += 1
        bkpivot_search(sg, k, seed, l, sink, global_check=check, spawner=spawner)
    return searched


# ── Backends ──────────────────────────────────────────────
def _run_inline(g: Graph, order: DegeneracyOrder, cfg: RunConfig, sink: PlexSink, tally: WorkerTally) -> None:
    scratch = NeighborhoodScratch(g.n)
    for i in range(g.n):
        tally.seed_sets += search_anchor(g, order, cfg, i, sink, scratch)


def _run_threads(
    g: Graph,
    order: DegeneracyOrder,
    cfg: RunConfig,
    sink: PlexSink,
    pool: WorkStealingPool,
    partials: list[WorkerTally],
) -> None:
    splitter = _Splitter(pool, cfg.split_threshold)
    scratches = [NeighborhoodScratch(g.n) for _ in range(pool.workers)]

    def anchor_task(i: int) -> None:
        worker = pool.worker_index()
        partials[worker].seed_sets += search_anchor(g, order, cfg, i, sink, scratches[worker], splitter)

    for i in range(g.n):
        pool.submit(partial(anchor_task, i))
    pool.run()
    logger.debug("Thread pool executed %d tasks for %d anchors", pool.executed, g.n)


_process_job: tuple[Graph, DegeneracyOrder, RunConfig] | None = None


def _init_process(g: Graph, order: DegeneracyOrder, cfg: RunConfig) -> None:
    global _process_job
    _process_job = (g, order, cfg)


def _process_chunk(positions: Sequence[int]) -> tuple[list[tuple[int, ...]], int]:
    g, order, cfg = _process_job
    sink = BufferingSink()
    scratch = NeighborhoodScratch(g.n)
    searched = sum(search_anchor(g, order, cfg, i, sink, scratch) for i in positions)
    return sink.rows, searched


def _run_processes(g: Graph, order: DegeneracyOrder, cfg: RunConfig, sink: PlexSink, tally: WorkerTally) -> None:
    chunks = max(cfg.threads * 4, 1)
    jobs = [range(j, g.n, chunks) for j in range(min(chunks, g.n))]
    with ProcessPoolExecutor(
        max_workers=cfg.threads,
        initializer=_init_process,
        initargs=(g, order, cfg),
    ) as executor:
        futures = [executor.submit(_process_chunk, list(job)) for job in jobs]
        for future in as_completed(futures):
            plexes, searched = future.result()
            tally.seed_sets += searched
            for plex in plexes:
                sink.accept(plex)


# ── Entry point ───────────────────────────────────────────
def _validated(cfg: RunConfig) -> RunConfig:
    try:
        return RunConfig.model_validate(cfg.model_dump())
    except ValidationError as exc:
        raise ConfigurationError(str(exc)) from exc


def run(g: Graph, cfg: RunConfig, sink: PlexSink) -> RunSummary:
    """
    List maximal k-plexes of g into ``sink``.

    With l = 0 every maximal k-plex is listed (Part I for sizes ≤ 2k−2, then
    Part II); with l ≥ 2k−1 only Part II runs and plexes smaller than l are
    never emitted. All emissions have happened when this returns.
    """
    cfg = _validated(cfg)
    watch = Stopwatch()
    order = degeneracy_order(g)
    logger.info(
        "Listing maximal %d-plexes (l=%d) on n=%d m=%d D=%d with %d %s worker(s)",
        cfg.k, cfg.l, g.n, g.m, order.degeneracy, cfg.threads, cfg.backend,
    )

    parallel = cfg.threads > 1
    use_processes = parallel and cfg.backend == "process"
    pool = WorkStealingPool(cfg.threads) if parallel and not use_processes else None
    partials = [WorkerTally() for _ in range(pool.workers if pool else 1)]
    tallying = _TallyingSink(sink, partials, pool.worker_index if pool else lambda: 0)

    if not cfg.large_mode:
        list_small_plexes(g, cfg.k, tallying)
        logger.debug("Part I emitted %d plexes", partials[0].plexes)

    if pool is not None:
        _run_threads(g, order, cfg, tallying, pool, partials)
    elif use_processes:
        _run_processes(g, order, cfg, tallying, partials[0])
    else:
        _run_inline(g, order, cfg, tallying, partials[0])

    total = count_reduce(partials)
    summary = RunSummary(
        plexes=total.plexes,
        max_size=total.max_size,
        elapsed_ms=watch.elapsed_ms,
        seed_sets=total.seed_sets,
    )
    logger.info("Done: %s seed_sets=%d", summary.line(), summary.seed_sets)
    return summary
