"""
Small Plexes
============
Part I of the listing: every maximal k-plex with at most 2k−2 vertices, found
with the basic Bron-Kerbosch recursion over the whole graph. Plexes this small
may be disconnected, so the seed-graph decomposition cannot reach them.
"""

from collections.abc import Iterable

from core.graph import Graph
from engine.sinks import PlexSink
from utils.helpers import logger


def is_kplex(g: Graph, s: Iterable[int], k: int) -> bool:
    """True iff every v in s has at most k non-neighbors in s, itself included."""
    members = set(s)
    nbr_sets = g.neighbor_sets
    size = len(members)
    return all(size - len(nbr_sets[v] & members) <= k for v in members)


class SmallPlexLister:
    """Bron-Kerbosch over the whole vertex set, never growing P past 2k−2 vertices."""

    def __init__(self, g: Graph, k: int, sink: PlexSink) -> None:
        self.k = k
        self.limit = 2 * k - 2
        self.sink = sink
        self._nbrs = g.neighbor_sets
        self._n = g.n

    def run(self) -> None:
        if self.limit < 1:
            return
        self._spread([])

    # ── k-plex bookkeeping ────────────────────────────────
    def _non_neighbors(self, p: list[int], v: int) -> int:
        # counts v itself when v is in p
        nbrs = self._nbrs[v]
        return sum(1 for w in p if w not in nbrs)

    def _saturated(self, p: list[int]) -> list[int]:
        return [w for w in p if self._non_neighbors(p, w) == self.k]

    def _extendable(self, p: list[int], saturated: list[int], v: int) -> bool:
        if self._non_neighbors(p, v) + 1 > self.k:
            return False
        nbrs = self._nbrs[v]
        return all(w in nbrs for w in saturated)

    def _reach(self, p: list[int]) -> list[int]:
        """Vertices outside p adjacent to some member, ascending."""
        reach: set[int] = set().union(*(self._nbrs[w] for w in p))
        reach.difference_update(p)
        return sorted(reach)

    def _filter(self, p: list[int], vertices: list[int]) -> list[int]:
        saturated = self._saturated(p)
        return [v for v in vertices if self._extendable(p, saturated, v)]

    # ── recursion ─────────────────────────────────────────
    def _spread(self, p: list[int]) -> None:
        """
        Nodes with |P| < k. Every vertex still fits, so C is implicitly the IDs
        after P's last vertex and X the remaining IDs before it.
        """
        n = self._n
        if p and len(p) == n:
            self.sink.accept(tuple(p))
            return
        for u in range(p[-1] + 1 if p else 0, n):
            p.append(u)
            if len(p) < self.k:
                self._spread(p)
            else:
                self._open(p)
            p.pop()

    def _open(self, p: list[int]) -> None:
        # |P| = k: materialize C and X from N(P) only
        saturated = self._saturated(p)
        last = p[-1]
        cand: list[int] = []
        excl: list[int] = []
        for v in self._reach(p):
            if self._extendable(p, saturated, v):
                (cand if v > last else excl).append(v)
        self._expand(p, cand, excl)

    def _expand(self, p: list[int], cand: list[int], excl: list[int]) -> None:
        if not cand and not excl:
            self.sink.accept(tuple(p))
            return
        if len(p) >= self.limit:
            # a nonempty filtered C or X proves P extendable, hence not maximal
            return
        for i, u in enumerate(cand):
            p.append(u)
            self._expand(p, self._filter(p, cand[i + 1 :]), self._filter(p, excl + cand[:i]))
            p.pop()


def list_small_plexes(g: Graph, k: int, sink: PlexSink) -> None:
    """Emit exactly the maximal k-plexes of g with at most 2k−2 vertices."""
    logger.debug("Part I: small plexes, k=%d, n=%d", k, g.n)
    SmallPlexLister(g, k, sink).run()
