import itertools

import pytest

from core.ordering import degeneracy_order
from engine.bits import bits_of, mask_of
from engine.bkpivot import PivotSearch, SearchState, bkpivot_search
from engine.seeder import build_seed_graph, enum_seed_sets
from engine.sinks import CollectingSink
from engine.smallplex import is_kplex
from services.oracle_service import brute_list
from tests.helpers import complete, graph_of, random_graph, star


def adjacency_masks(g):
    return [mask_of(nbrs) for nbrs in g.neighbor_lists]


def pivot_plexes(g, k, p=(), c=None, x=0):
    adj = adjacency_masks(g)
    found = []
    c = (1 << g.n) - 1 if c is None else c
    state = SearchState(adj, p, c & ~mask_of(p), x)
    PivotSearch(adj, k, found.append).run(state)
    assert len(found) == len(set(found))
    return {tuple(bits_of(mask)) for mask in found}


class RecordingSearch(PivotSearch):
    """Records the children of the root instead of descending into them."""

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self.children = []

    def _descend(self, st, width):
        self.children.append((bits_of(st.p), bits_of(st.c), bits_of(st.x)))
        assert st.consistent()


def branching_pairs():
    # local 0 misses 1, 2, 3, 4 and 6; every other pair is adjacent
    missing = {(0, 1), (0, 2), (0, 3), (0, 4), (0, 6)}
    return [e for e in itertools.combinations(range(7), 2) if e not in missing]


def branching_adjacency():
    adj = [0] * 7
    for a, b in branching_pairs():
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


# ── SearchState ───────────────────────────────────────────
def test_push_pop_keeps_counters_consistent():
    g = random_graph(10, 0.5, seed=7)
    adj = adjacency_masks(g)
    st = SearchState(adj, (0,), c=(1 << g.n) - 2)
    assert st.consistent()
    for v in (3, 5, 8):
        st.push(v)
        assert st.consistent()
    clone = st.copy()
    for v in (8, 5, 3):
        st.pop(v)
        st.c |= 1 << v
        assert st.consistent()
    assert bits_of(clone.p) == [0, 3, 5, 8]
    assert clone.consistent()


def test_members_of_p_count_themselves():
    g = graph_of([(0, 1)], isolated=[2])
    st = SearchState(adjacency_masks(g), (0, 1, 2))
    assert st.nonadj == [2, 2, 3]
    assert bits_of(st.saturated(2)) == [0, 1]


# ── filters and pivot ─────────────────────────────────────
@pytest.mark.parametrize("seed", range(6))
def test_filter_agrees_with_is_kplex(seed):
    g = random_graph(10, 0.5, seed)
    adj = adjacency_masks(g)
    for k in (1, 2, 3):
        for p in itertools.combinations(range(g.n), 3):
            if not is_kplex(g, p, k):
                continue
            rest = ((1 << g.n) - 1) & ~mask_of(p)
            st = SearchState(adj, p, rest)
            kept = PivotSearch(adj, k, lambda _: None).filter_extendable(st, rest)
            assert bits_of(kept) == [v for v in bits_of(rest) if is_kplex(g, [*p, v], k)]


def test_filter_with_empty_p_keeps_everything():
    g = complete(3)
    adj = adjacency_masks(g)
    st = SearchState(adj, (), 0b111)
    assert PivotSearch(adj, 1, lambda _: None).filter_extendable(st, 0b111) == 0b111


def test_pivot_prefers_p_then_smallest_id():
    g = star(3)
    adj = adjacency_masks(g)
    search = PivotSearch(adj, 2, lambda _: None)
    assert search.select_pivot(SearchState(adj, (), 0b1111)) == (1, 3)
    assert search.select_pivot(SearchState(adj, (2,), 0b1011)) == (2, 3)


# ── branching ─────────────────────────────────────────────
def test_pivot_in_p_opens_k_prime_plus_one_branches():
    adj = branching_adjacency()
    search = RecordingSearch(adj, 4, lambda _: None)
    search.run(SearchState(adj, (0, 1), mask_of([2, 3, 4, 5, 6])))
    assert search.children == [
        ([0, 1], [3, 4, 5, 6], [2]),
        ([0, 1, 2], [4, 5, 6], [3]),
        ([0, 1, 2, 3], [5], [4, 6]),
    ]


def test_branching_example_lists_every_plex_containing_the_start():
    g = graph_of(branching_pairs())
    labelled = {tuple(sorted(g.external(v) for v in p)) for p in brute_list(g, 4).plexes}
    expected = {p for p in labelled if {0, 1} <= set(p)}

    adj = branching_adjacency()
    found = []
    PivotSearch(adj, 4, found.append).run(SearchState(adj, (0, 1), mask_of([2, 3, 4, 5, 6])))
    assert {tuple(bits_of(mask)) for mask in found} == expected


def test_pivot_in_c_branches_exclude_then_include():
    g = star(3)
    adj = adjacency_masks(g)
    search = RecordingSearch(adj, 2, lambda _: None)
    search.run(SearchState(adj, (), 0b1111))
    assert search.children == [([], [0, 2, 3], [1]), ([1], [0, 2, 3], [])]


# ── whole-graph search ────────────────────────────────────
def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        yield graph_of([e for e, keep in zip(pairs, chosen) if keep], isolated=range(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_exhaustive_small_graphs(n):
    for g in all_graphs(n):
        for k in (1, 2, 3):
            assert pivot_plexes(g, k) == set(brute_list(g, k).plexes)


def test_clique_is_one_plex():
    assert pivot_plexes(complete(4), 1) == {(0, 1, 2, 3)}


def test_star_two_plexes():
    g = star(3)
    assert pivot_plexes(g, 2) == {(0, 1, 2), (0, 1, 3), (0, 2, 3)}


# ── seed-graph search ─────────────────────────────────────
def test_search_in_a_seed_graph_applies_the_size_floor():
    g = complete(4)
    order = degeneracy_order(g)
    sg = build_seed_graph(g, order, 0)
    sink = CollectingSink()
    seed = next(iter(enum_seed_sets(sg, 1, 0)))
    bkpivot_search(sg, 1, seed, 0, sink)
    assert sink.plexes == {(0, 1, 2, 3)}

    sink = CollectingSink()
    bkpivot_search(sg, 1, seed, 5, sink)
    assert sink.count == 0


def test_global_check_can_veto():
    g = complete(4)
    sg = build_seed_graph(g, degeneracy_order(g), 0)
    sink = CollectingSink()
    seed = next(iter(enum_seed_sets(sg, 1, 0)))
    bkpivot_search(sg, 1, seed, 0, sink, global_check=lambda _: False)
    assert sink.count == 0
