"""
Ingest Service
==============
Parses SNAP/LAW style edge lists into Graphs and reports basic statistics.
"""

from collections.abc import Iterable, Iterator
from pathlib import Path

from core.graph import Graph, build_graph
from core.ordering import degeneracy_order
from schemas.run_schemas import GraphStats
from utils.errors import EdgeListParseError, GraphLoadError
from utils.helpers import logger

COMMENT_PREFIXES = ("#", "%")
MAX_VERTEX_ID = (1 << 63) - 1


def _parse_id(token: str, line_no: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise EdgeListParseError(f"expected a non-negative integer vertex ID, got {token!r}", line_no)
    value = int(token)
    if value > MAX_VERTEX_ID:
        raise EdgeListParseError(f"vertex ID {token} overflows the 64-bit ID type", line_no)
    return value


def parse_edge_list(text: str | Iterable[str]) -> Iterator[tuple[int, int]]:
    """
    Yield one (u, v) pair per data line.

    Blank lines and lines starting with '#' or '%' are skipped; tokens after
    the second are ignored. CRLF and runs of whitespace are tolerated.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise EdgeListParseError("expected two vertex IDs", line_no)
        yield _parse_id(tokens[0], line_no), _parse_id(tokens[1], line_no)


def load(path: Path | str) -> Graph:
    """Read an edge-list file into a Graph."""
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as fh:
            g = build_graph(parse_edge_list(fh))
    except EdgeListParseError as exc:
        raise exc.with_path(path) from exc
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphLoadError(path, str(exc)) from exc
    logger.info("Loaded %s: n=%d m=%d", path, g.n, g.m)
    return g


def stats(g: Graph) -> GraphStats:
    """n, m, Δ and D of a graph."""
    order = degeneracy_order(g)
    return GraphStats(n=g.n, m=g.m, max_degree=g.max_degree, degeneracy=order.degeneracy)
