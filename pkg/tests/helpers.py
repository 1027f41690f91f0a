"""Graph builders and engine shortcuts shared by the test modules."""

import itertools
import random

from core.graph import Graph, build_graph
from engine.scheduler import run
from engine.sinks import CollectingSink
from schemas.run_schemas import RunConfig


def graph_of(edges, isolated=()) -> Graph:
    return build_graph(edges, isolated=isolated)


def path(n: int) -> Graph:
    return build_graph([(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return build_graph([(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(*parts: int) -> Graph:
    groups, start = [], 0
    for size in parts:
        groups.append(range(start, start + size))
        start += size
    edges = [
        (u, v)
        for a, b in itertools.combinations(groups, 2)
        for u in a
        for v in b
    ]
    return build_graph(edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return build_graph(edges, isolated=range(n))


def engine_plexes(g: Graph, k: int, l: int = 0, **options) -> set[tuple[int, ...]]:
    sink = CollectingSink()
    run(g, RunConfig(k=k, l=l, **options), sink)
    assert sink.duplicates == 0
    return sink.plexes


def label_sets(g: Graph, plexes) -> set[frozenset[int]]:
    return {frozenset(g.external(v) for v in plex) for plex in plexes}
