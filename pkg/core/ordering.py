"""
Degeneracy Ordering
===================
Peeling order η, per-vertex removal degrees, and 1-/2-hop neighborhood
queries restricted to vertices before or after a vertex in η.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from core.graph import Graph


@dataclass(frozen=True, eq=False)
class DegeneracyOrder:
    """η = v_1 … v_n with its inverse and the degree of each vertex at removal."""

    eta: tuple[int, ...]
    position: tuple[int, ...]
    core: tuple[int, ...]
    degeneracy: int

    def __len__(self) -> int:
        return len(self.eta)


def degeneracy_order(g: Graph) -> DegeneracyOrder:
    """
    Repeatedly remove a minimum-degree vertex, smallest internal ID first.

    Buckets are indexed by current degree; each bucket is a min-heap of IDs with
    lazy deletion, so the tie-break is exact. The minimum live degree drops by
    at most one per removal, which keeps the bucket scan linear overall.
    """
    n = g.n
    if n == 0:
        return DegeneracyOrder(eta=(), position=(), core=(), degeneracy=0)

    degree = g.degrees.tolist()
    buckets: list[list[int]] = [[] for _ in range(g.max_degree + 1)]
    for v in range(n):
        buckets[degree[v]].append(v)  # ascending v, already heap-ordered

    removed = bytearray(n)
    nbrs = g.neighbor_lists
    eta: list[int] = []
    core = [0] * n
    d = 0
    for _ in range(n):
        while True:
            bucket = buckets[d]
            while bucket and (removed[bucket[0]] or degree[bucket[0]] != d):
                heapq.heappop(bucket)
            if bucket:
                break
            d += 1
        v = heapq.heappop(bucket)
        removed[v] = 1
        eta.append(v)
        core[v] = d
        for u in nbrs[v]:
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(buckets[degree[u]], u)
        d = max(d - 1, 0)

    position = [0] * n
    for i, v in enumerate(eta):
        position[v] = i
    return DegeneracyOrder(
        eta=tuple(eta),
        position=tuple(position),
        core=tuple(core),
        degeneracy=max(core),
    )


# ── Neighborhood queries ──────────────────────────────────
class NeighborhoodScratch:
    """Stamp-based marker array; reset is O(1) so one instance serves many queries."""

    __slots__ = ("marks", "_stamp")

    def __init__(self, n: int) -> None:
        self.marks = [0] * n
        self._stamp = 0

    def fresh(self) -> int:
        self._stamp += 1
        return self._stamp


def later_neighbors(g: Graph, order: DegeneracyOrder, v: int) -> list[int]:
    """N_≻(v), sorted by position in η."""
    pos = order.position
    pv = pos[v]
    return sorted((u for u in g.neighbor_lists[v] if pos[u] > pv), key=pos.__getitem__)


def earlier_neighbors(g: Graph, order: DegeneracyOrder, v: int) -> list[int]:
    """N_≺(v), sorted by position in η."""
    pos = order.position
    pv = pos[v]
    return sorted((u for u in g.neighbor_lists[v] if pos[u] < pv), key=pos.__getitem__)


def _two_hop(
    g: Graph,
    order: DegeneracyOrder,
    v: int,
    later: bool,
    scratch: NeighborhoodScratch | None,
) -> list[int]:
    scratch = scratch or NeighborhoodScratch(g.n)
    stamp = scratch.fresh()
    marks = scratch.marks
    nbrs = g.neighbor_lists
    pos = order.position
    pv = pos[v]

    marks[v] = stamp
    for w in nbrs[v]:
        marks[w] = stamp
    found: list[int] = []
    for w in nbrs[v]:
        for u in nbrs[w]:
            if marks[u] != stamp:
                marks[u] = stamp
                if (pos[u] > pv) == later:
                    found.append(u)
    found.sort(key=pos.__getitem__)
    return found


def two_hop_later(
    g: Graph,
    order: DegeneracyOrder,
    v: int,
    scratch: NeighborhoodScratch | None = None,
) -> list[int]:
    """N²_≻(v): vertices at distance exactly 2 from v placed after v in η."""
    return _two_hop(g, order, v, True, scratch)


def two_hop_earlier(
    g: Graph,
    order: DegeneracyOrder,
    v: int,
    scratch: NeighborhoodScratch | None = None,
) -> list[int]:
    """N²_≺(v): vertices at distance exactly 2 from v placed before v in η."""
    return _two_hop(g, order, v, False, scratch)
