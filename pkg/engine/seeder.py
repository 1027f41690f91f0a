"""
Seeder
======
Per-anchor decomposition for large plexes (|P| ≥ 2k−1).

For anchor v_i the seed graph G_i holds v_i, its later neighbors and its later
2-hop neighbors; every v_i-leaded plex of that size lives inside it and takes
at most k−1 of the 2-hop vertices. Local vertex j of a seed graph is bit j of
every mask used here: local 0 is the anchor, then the 1-hop block, then the
2-hop block.

The bipartite view B_i links the vertices before v_i (within two hops) to the
seed-graph side so that global maximality is decided without revisiting G.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, replace

from core.graph import Graph
from core.ordering import (
    DegeneracyOrder,
    NeighborhoodScratch,
    earlier_neighbors,
    later_neighbors,
    two_hop_earlier,
    two_hop_later,
)
from engine.bits import iter_bits, mask_of


# ── Seed graph ────────────────────────────────────────────
@dataclass(frozen=True, eq=False)
class SeedGraph:
    anchor: int
    one_hop: tuple[int, ...]
    two_hop: tuple[int, ...]
    members: tuple[int, ...]  # local -> global
    local_ids: dict[int, int]  # global -> local
    adj: tuple[int, ...]  # local adjacency masks, restricted to live vertices
    live: int  # vertices not removed by pruning
    one_hop_mask: int
    two_hop_mask: int

    @property
    def live_count(self) -> int:
        return self.live.bit_count()

    def to_global(self, mask: int) -> list[int]:
        members = self.members
        return [members[j] for j in iter_bits(mask)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


def _local_adjacency(g: Graph, members: tuple[int, ...], local_ids: dict[int, int]) -> tuple[int, ...]:
    nbrs = g.neighbor_lists
    rows = []
    for v in members:
        row = 0
        for w in nbrs[v]:
            j = local_ids.get(w)
            if j is not None:
                row |= 1 << j
        rows.append(row)
    return tuple(rows)


def build_seed_graph(
    g: Graph,
    order: DegeneracyOrder,
    i: int,
    scratch: NeighborhoodScratch | None = None,
) -> SeedGraph:
    """G_i = G[{v_i} ∪ N_≻(v_i) ∪ N²_≻(v_i)] for the vertex at (0-based) position i."""
    anchor = order.eta[i]
    one = tuple(later_neighbors(g, order, anchor))
    two = tuple(two_hop_later(g, order, anchor, scratch))
    members = (anchor, *one, *two)
    local_ids = {v: j for j, v in enumerate(members)}
    one_mask = ((1 << len(one)) - 1) << 1
    two_mask = ((1 << len(two)) - 1) << (1 + len(one))
    return SeedGraph(
        anchor=anchor,
        one_hop=one,
        two_hop=two,
        members=members,
        local_ids=local_ids,
        adj=_local_adjacency(g, members, local_ids),
        live=(1 << len(members)) - 1,
        one_hop_mask=one_mask,
        two_hop_mask=two_mask,
    )


def prune_seed_graph(sg: SeedGraph, k: int, l: int) -> SeedGraph:
    """
    Drop vertices that share too few neighbors with the anchor to sit in a
    plex of size ≥ l, repeating until nothing changes. Identity unless
    l ≥ 2k−1.
    """
    if l < 2 * k - 1:
        return sg

    one_floor = l - 2 * k
    two_floor = l - 2 * k + 2
    adj = sg.adj
    live = sg.live
    anchor_nbrs = adj[0] & live
    changed = True
    while changed:
        changed = False
        for u in iter_bits(live & ~1):
            floor = one_floor if sg.one_hop_mask >> u & 1 else two_floor
            if (adj[u] & anchor_nbrs).bit_count() < floor:
                live &= ~(1 << u)
                anchor_nbrs &= ~(1 << u)
                changed = True

    if live == sg.live:
        return sg
    masked = tuple(row & live if live >> j & 1 else 0 for j, row in enumerate(adj))
    return replace(
        sg,
        adj=masked,
        live=live,
        one_hop_mask=sg.one_hop_mask & live,
        two_hop_mask=sg.two_hop_mask & live,
    )


# ── Seed sets ─────────────────────────────────────────────
@dataclass(frozen=True)
class SeedSet:
    """P_s = {anchor} ∪ s, searched with candidates C_s and excluded X_s."""

    anchor: int
    s: tuple[int, ...]  # local IDs from the 2-hop block
    candidates: int
    excluded: int

    @property
    def p_ids(self) -> tuple[int, ...]:
        return (0, *self.s)


def check_seed_pair(sg: SeedGraph, u: int, v: int, k: int, l: int) -> bool:
    """
    False when u and v cannot both sit in a plex of size ≥ l led by the anchor:
    too few common neighbors among the anchor's later neighbors.
    """
    common = (sg.adj[u] & sg.adj[v] & sg.one_hop_mask).bit_count()
    slack = max(k - 3, 0)
    if sg.has_edge(u, v):
        return common >= l - 2 * k - slack
    return common >= l - 2 * k + 2 - slack


def enum_seed_sets(sg: SeedGraph, k: int, l: int, prune2: bool = True) -> Iterator[SeedSet]:
    """
    Every S ⊆ 2-hop with |S| ≤ k−1, by size then lexicographically.

    Sets of size s+1 extend accepted sets of size s, so a rejected pair is
    never revisited inside a larger set. Pair rejection only applies in
    large-plex mode.
    """
    two = list(iter_bits(sg.two_hop_mask))
    checking = prune2 and l >= 2 * k - 1
    verdicts: dict[tuple[int, int], bool] = {}

    def compatible(a: int, b: int) -> bool:
        if not checking:
            return True
        key = (a, b)
        if key not in verdicts:
            verdicts[key] = check_seed_pair(sg, a, b, k, l)
        return verdicts[key]

    def seed(indices: tuple[int, ...]) -> SeedSet:
        s = tuple(two[j] for j in indices)
        s_mask = mask_of(s)
        return SeedSet(
            anchor=sg.anchor,
            s=s,
            candidates=sg.one_hop_mask,
            excluded=sg.two_hop_mask & ~s_mask,
        )

    level: list[tuple[int, ...]] = [()]
    yield seed(())
    for _ in range(1, k):
        grown: list[tuple[int, ...]] = []
        for indices in level:
            start = indices[-1] + 1 if indices else 0
            for j in range(start, len(two)):
                w = two[j]
                if all(compatible(two[a], w) for a in indices):
                    grown.append((*indices, j))
        if not grown:
            return
        for indices in grown:
            yield seed(indices)
        level = grown


# ── Bipartite view ────────────────────────────────────────
@dataclass(frozen=True, eq=False)
class BipartiteView:
    left: tuple[int, ...]  # global IDs before the anchor, within two hops
    right: tuple[int, ...]  # the seed graph's members, same local order
    edges: tuple[int, ...]  # per left vertex: mask of its right-side neighbors


def build_bipartite(
    g: Graph,
    order: DegeneracyOrder,
    i: int,
    sg: SeedGraph | None = None,
    scratch: NeighborhoodScratch | None = None,
) -> BipartiteView:
    """B_i for the vertex at (0-based) position i; right side indexed like G_i."""
    sg = sg or build_seed_graph(g, order, i, scratch)
    anchor = order.eta[i]
    pos = order.position
    left = sorted(
        [*earlier_neighbors(g, order, anchor), *two_hop_earlier(g, order, anchor, scratch)],
        key=pos.__getitem__,
    )
    nbrs = g.neighbor_lists
    local_ids = sg.local_ids
    edges = []
    for u in left:
        row = 0
        for w in nbrs[u]:
            j = local_ids.get(w)
            if j is not None:
                row |= 1 << j
        edges.append(row)
    return BipartiteView(left=tuple(left), right=sg.members, edges=tuple(edges))


def globally_maximal(p: int, sg: SeedGraph, bv: BipartiteView, k: int) -> bool:
    """
    True iff no vertex before the anchor can join the plex p (a local mask).

    A left vertex u is blocked when it has fewer than |p|+1−k neighbors in p,
    or when some saturated member of p (exactly k non-neighbors, itself
    included) is not adjacent to u.
    """
    size = p.bit_count()
    adj = sg.adj
    saturated = 0
    for v in iter_bits(p):
        if size - (adj[v] & p).bit_count() == k:
            saturated |= 1 << v
    need = size + 1 - k
    for row in bv.edges:
        if (row & p).bit_count() >= need and not saturated & ~row:
            return False
    return True
