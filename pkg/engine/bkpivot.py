"""
BKPivot
=======
Pivot-based branching search listing every maximal k-plex that contains P,
draws from C and avoids X, inside one seed graph.

Sets are local bit masks; ``nonadj[v]`` holds |P \\ N(v)| for every vertex of
the search universe (v itself counts when v ∈ P). Moves into P update the
counters incrementally and are undone on backtrack; C and X are restored from
saved masks.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from functools import partial
from typing import Protocol

from engine.bits import iter_bits, mask_of
from engine.seeder import SeedGraph, SeedSet
from engine.sinks import PlexSink


class Spawner(Protocol):
    def should_split(self, candidates: int) -> bool: ...

    def spawn(self, task: Callable[[], None]) -> None: ...


class SearchState:
    """P, C, X plus per-vertex non-neighbor counters against P."""

    __slots__ = ("adj", "p", "c", "x", "nonadj", "universe")

    def __init__(self, adj: Sequence[int], p: Iterable[int] = (), c: int = 0, x: int = 0) -> None:
        self.adj = adj
        p = tuple(p)
        self.universe = mask_of(p) | c | x
        self.p = 0
        self.c = c
        self.x = x
        self.nonadj = [0] * len(adj)
        for v in p:
            self.push(v)

    def push(self, v: int) -> None:
        """Move v into P (out of C when it was there)."""
        bit = 1 << v
        self.p |= bit
        self.c &= ~bit
        nonadj = self.nonadj
        for u in iter_bits(self.universe & ~self.adj[v]):
            nonadj[u] += 1

    def pop(self, v: int) -> None:
        """Take v out of P; the caller restores C/X."""
        self.p &= ~(1 << v)
        nonadj = self.nonadj
        for u in iter_bits(self.universe & ~self.adj[v]):
            nonadj[u] -= 1

    def saturated(self, k: int) -> int:
        nonadj = self.nonadj
        mask = 0
        for w in iter_bits(self.p):
            if nonadj[w] == k:
                mask |= 1 << w
        return mask

    def copy(self) -> "SearchState":
        clone = SearchState.__new__(SearchState)
        clone.adj = self.adj
        clone.p, clone.c, clone.x = self.p, self.c, self.x
        clone.nonadj = list(self.nonadj)
        clone.universe = self.universe
        return clone

    def consistent(self) -> bool:
        """Recount every counter from scratch (audit helper)."""
        for v in iter_bits(self.universe):
            if self.nonadj[v] != (self.p & ~self.adj[v]).bit_count():
                return False
        return not (self.p & self.c or self.p & self.x or self.c & self.x)


class PivotSearch:
    """
    One search over a fixed local adjacency.

    ``emit`` receives candidate solutions as masks; it applies the caller's
    size and global-maximality filters. Branches whose P ∪ C cannot reach
    ``min_size`` are cut.
    """

    def __init__(
        self,
        adj: Sequence[int],
        k: int,
        emit: Callable[[int], None],
        min_size: int = 0,
        spawner: Spawner | None = None,
    ) -> None:
        self.adj = adj
        self.k = k
        self.emit = emit
        self.min_size = min_size
        self.spawner = spawner

    def run(self, st: SearchState) -> None:
        self._search(st)

    # ── filters ───────────────────────────────────────────
    def _extendable(self, st: SearchState, v: int, saturated: int) -> bool:
        return st.nonadj[v] < self.k and not saturated & ~self.adj[v]

    def filter_extendable(self, st: SearchState, mask: int) -> int:
        """Members v of mask with G[P ∪ {v}] a k-plex."""
        if not st.p:
            return mask
        saturated = st.saturated(self.k)
        kept = 0
        for v in iter_bits(mask):
            if self._extendable(st, v, saturated):
                kept |= 1 << v
        return kept

    # ── pivot ─────────────────────────────────────────────
    def _pc_non_neighbors(self, st: SearchState, v: int) -> int:
        # non-neighbors of v in P ∪ C, v itself included when v ∈ P ∪ C
        return st.nonadj[v] + (st.c & ~self.adj[v]).bit_count()

    def select_pivot(self, st: SearchState) -> tuple[int, int]:
        """Minimum-degree vertex of G[P ∪ C]; P first, then smallest ID on ties."""
        best, best_q = -1, -1
        for part in (st.p, st.c):
            for v in iter_bits(part):
                q = self._pc_non_neighbors(st, v)
                if q > best_q:
                    best, best_q = v, q
        return best, best_q

    def _x_extends(self, st: SearchState, pc: int) -> bool:
        k = self.k
        saturated = 0
        for w in iter_bits(pc):
            if self._pc_non_neighbors(st, w) == k:
                saturated |= 1 << w
        for v in iter_bits(st.x):
            if self._pc_non_neighbors(st, v) + 1 <= k and not saturated & ~self.adj[v]:
                return True
        return False

    # ── recursion ─────────────────────────────────────────
    def _search(self, st: SearchState) -> None:
        c0, x0 = st.c, st.x
        st.c = self.filter_extendable(st, c0)
        st.x = self.filter_extendable(st, x0)
        self._node(st)
        st.c, st.x = c0, x0

    def _node(self, st: SearchState) -> None:
        if not st.c:
            if not st.x:
                self.emit(st.p)
            return
        if self.min_size and (st.p | st.c).bit_count() < self.min_size:
            return
        u_p, q = self.select_pivot(st)
        if q <= self.k:
            pc = st.p | st.c
            if not self._x_extends(st, pc):
                self.emit(pc)
            return
        self.branch_on_pivot(st, u_p)

    def _descend(self, st: SearchState, width: int) -> None:
        if self.spawner is not None and self.spawner.should_split(width):
            self.spawner.spawn(partial(self._search, st.copy()))
        else:
            self._search(st)

    def branch_on_pivot(self, st: SearchState, u_p: int) -> None:
        """
        u_p ∈ C: exclude it, then include it.
        u_p ∈ P: with u_1 … u_q2 its non-neighbors in C and k′ = k − |P \\ N(u_p)|,
        branch i (≤ k′) takes u_1 … u_{i−1} into P and u_i into X; the last
        branch takes u_1 … u_k′ into P and excludes the rest.
        """
        c0, x0 = st.c, st.x
        width = c0.bit_count()
        bit = 1 << u_p

        if not st.p & bit:
            st.c, st.x = c0 & ~bit, x0 | bit
            self._descend(st, width)
            st.c, st.x = c0, x0
            st.push(u_p)
            self._descend(st, width)
            st.pop(u_p)
            st.c = c0
            return

        nonadj = st.nonadj
        k_prime = self.k - nonadj[u_p]
        outsiders = sorted(iter_bits(c0 & ~self.adj[u_p]), key=lambda v: (nonadj[v], v))
        pushed: list[int] = []
        feasible = True
        for u_i in outsiders[:k_prime]:
            c_here = st.c
            st.c, st.x = c_here & ~(1 << u_i), x0 | (1 << u_i)
            self._descend(st, width)
            st.c, st.x = c_here, x0
            if not self._extendable(st, u_i, st.saturated(self.k)):
                feasible = False
                break
            st.push(u_i)
            pushed.append(u_i)
        if feasible:
            rest = mask_of(outsiders[k_prime:])
            c_here = st.c
            st.c, st.x = c_here & ~rest, x0 | rest
            self._descend(st, width)
            st.c, st.x = c_here, x0
        for v in reversed(pushed):
            st.pop(v)
        st.c, st.x = c0, x0


def bkpivot_search(
    sg: SeedGraph,
    k: int,
    seed: SeedSet,
    l: int,
    sink: PlexSink,
    global_check: Callable[[int], bool] | None = None,
    spawner: Spawner | None = None,
) -> None:
    """
    List the maximal plexes containing the seed set inside G_i.

    A plex reaches the sink only if it has more than 2k−2 vertices, at least l
    when l > 0, and passes ``global_check``.
    """
    floor = max(l, 2 * k - 1)

    def emit(mask: int) -> None:
        if mask.bit_count() < floor:
            return
        if global_check is not None and not global_check(mask):
            return
        sink.accept(sg.to_global(mask))

    state = SearchState(sg.adj, seed.p_ids, seed.candidates, seed.excluded)
    PivotSearch(sg.adj, k, emit, min_size=floor, spawner=spawner).run(state)
