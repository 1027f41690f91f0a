"""
Oracle Service
==============
Brute-force reference lister: tries every vertex subset. Shares nothing with
the engine beyond Graph, so the two can check each other on small inputs.
"""

from core.graph import Graph
from config.settings import settings
from schemas.run_schemas import OracleResult
from utils.errors import OracleTooLargeError


def brute_list(g: Graph, k: int, l: int = 0, max_vertices: int | None = None) -> OracleResult:
    """Every maximal k-plex of g with at least max(l, 1) vertices."""
    limit = max_vertices or settings.ORACLE_MAX_VERTICES
    n = g.n
    if n > limit:
        raise OracleTooLargeError(f"oracle enumerates 2^n subsets; n={n} exceeds the limit of {limit}")

    adj = [0] * n
    for v in range(n):
        for u in g.neighbors(v).tolist():
            adj[v] |= 1 << u

    def plex(mask: int) -> bool:
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if (mask & ~adj[v]).bit_count() > k:
                return False
            rest ^= low
        return True

    total = 1 << n
    is_plex = bytearray(total)
    for mask in range(1, total):
        is_plex[mask] = plex(mask)

    floor = max(l, 1)
    full = total - 1
    found: set[tuple[int, ...]] = set()
    for mask in range(1, total):
        if not is_plex[mask] or mask.bit_count() < floor:
            continue
        outside = full & ~mask
        maximal = True
        while outside:
            low = outside & -outside
            if is_plex[mask | low]:
                maximal = False
                break
            outside ^= low
        if maximal:
            found.add(tuple(v for v in range(n) if mask >> v & 1))
    return OracleResult(plexes=frozenset(found), count=len(found))
