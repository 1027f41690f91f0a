"""
k-Plex Lister — Entry Point
===========================
Command-line driver: load an edge list, list its maximal k-plexes (or those
with at least l vertices) and write one plex per line.

Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 constraint
violation.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import ExitStack
from typing import NoReturn, Sequence

from pydantic import ValidationError

from config.settings import settings
from core.graph import Graph
from engine.scheduler import run
from engine.sinks import CountingSink, WriterSink
from schemas.run_schemas import RunConfig, RunSummary, min_large_size
from services.ingest_service import load, stats
from services.oracle_service import brute_list
from utils.errors import EdgeListParseError, GraphLoadError, OracleTooLargeError
from utils.helpers import Stopwatch, logger, setup_logger

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_CONSTRAINT = 3


class _Parser(argparse.ArgumentParser):
    """argparse reports usage errors with exit code 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_at_least(floor: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < floor:
            raise argparse.ArgumentTypeError(f"must be >= {floor}, got {value}")
        return value

    return parse


def create_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kplex", description="List maximal k-plexes of an undirected graph.")
    parser.add_argument("--input", required=True, help="edge-list file (SNAP format)")
    parser.add_argument("--k", required=True, type=_int_at_least(1), help="plex relaxation k >= 1")
    parser.add_argument(
        "--min-size",
        type=_int_at_least(0),
        default=0,
        help="only list plexes with at least this many vertices (0 = all; otherwise >= 2k-1)",
    )
    parser.add_argument("--threads", type=_int_at_least(1), default=settings.DEFAULT_THREADS)
    parser.add_argument("--backend", choices=("thread", "process"), default=settings.BACKEND)
    parser.add_argument("--split-threshold", type=_int_at_least(1), default=settings.SPLIT_THRESHOLD)
    parser.add_argument("--count-only", action="store_true", help="count plexes without writing them")
    parser.add_argument("--output", help="output file (default: standard output)")
    parser.add_argument("--sorted", action="store_true", help="sort output lines before writing")
    parser.add_argument("--no-prune1", action="store_true", help="disable seed-graph pruning")
    parser.add_argument("--no-prune2", action="store_true", help="disable seed-set pair pruning")
    parser.add_argument("--stats", action="store_true", help="print n, m, max degree, degeneracy and exit")
    parser.add_argument("--oracle", action="store_true", help="use the brute-force lister (small graphs only)")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        default=settings.LOG_LEVEL.upper(),
    )
    return parser


def _list_plexes(g: Graph, cfg: RunConfig, sink: CountingSink, oracle: bool) -> RunSummary:
    if not oracle:
        return run(g, cfg, sink)
    watch = Stopwatch()
    result = brute_list(g, cfg.k, cfg.l)
    for plex in sorted(result.plexes):
        sink.accept(plex)
    return RunSummary(plexes=sink.count, max_size=sink.max_size, elapsed_ms=watch.elapsed_ms)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = create_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logger(level=args.log_level)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))

    try:
        g = load(args.input)
    except (GraphLoadError, EdgeListParseError) as exc:
        logger.error("%s", exc)
        return EXIT_IO

    if args.stats:
        print(stats(g).line())
        return EXIT_OK

    bound = min_large_size(args.k)
    if 0 < args.min_size < bound:
        logger.error(
            "--min-size %d is too small: listing large plexes requires l >= 2k-1 = %d",
            args.min_size,
            bound,
        )
        return EXIT_CONSTRAINT

    try:
        cfg = RunConfig(
            k=args.k,
            l=args.min_size,
            threads=args.threads,
            split_threshold=args.split_threshold,
            prune1=not args.no_prune1,
            prune2=not args.no_prune2,
            count_only=args.count_only,
            backend=args.backend,
        )
    except ValidationError as exc:
        logger.error("invalid configuration: %s", exc)
        return EXIT_USAGE

    with ExitStack() as stack:
        if cfg.count_only:
            sink = CountingSink()
        else:
            try:
                stream = (
                    stack.enter_context(open(args.output, "w", encoding="utf-8", newline="\n"))
                    if args.output
                    else sys.stdout
                )
            except OSError as exc:
                logger.error("cannot open output %s: %s", args.output, exc)
                return EXIT_IO
            sink = WriterSink(stream, g.original_ids, sorted_output=args.sorted)

        try:
            summary = _list_plexes(g, cfg, sink, args.oracle)
            if isinstance(sink, WriterSink):
                sink.close()
        except OracleTooLargeError as exc:
            logger.error("%s", exc)
            return EXIT_CONSTRAINT
        except OSError as exc:
            logger.error("cannot write output: %s", exc)
            return EXIT_IO

    print(summary.line(), file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
