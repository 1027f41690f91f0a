"""
Graph
=====
Immutable simple undirected graph stored as CSR arrays.

External vertex labels are remapped to dense internal IDs in order of first
appearance; every algorithm works on internal IDs and labels only come back at
output time.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

import numpy as np

_UINT32_MAX = np.iinfo(np.uint32).max


@dataclass(frozen=True, eq=False)
class Graph:
    """CSR adjacency with ascending neighbor lists per vertex."""

    n: int
    m: int
    offsets: np.ndarray  # int64, length n + 1
    adjacency: np.ndarray  # concatenated sorted neighbor lists, length 2m
    original_ids: np.ndarray  # internal -> external label

    def neighbors(self, v: int) -> np.ndarray:
        return self.adjacency[self.offsets[v] : self.offsets[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    @cached_property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    @cached_property
    def neighbor_lists(self) -> list[list[int]]:
        """Python lists of neighbors; hot loops index these instead of numpy views."""
        if self.n == 0:
            return []
        return [chunk.tolist() for chunk in np.split(self.adjacency, self.offsets[1:-1])]

    @cached_property
    def neighbor_sets(self) -> list[frozenset[int]]:
        return [frozenset(nbrs) for nbrs in self.neighbor_lists]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        idx = int(np.searchsorted(nbrs, v))
        return idx < len(nbrs) and int(nbrs[idx]) == v

    def external(self, v: int) -> int:
        return int(self.original_ids[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each undirected edge once, as external labels."""
        for u, nbrs in enumerate(self.neighbor_lists):
            for v in nbrs:
                if u < v:
                    yield self.external(u), self.external(v)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        """Undirected edges as (smaller, larger) external-label pairs."""
        return frozenset((min(a, b), max(a, b)) for a, b in self.edges())

    def __eq__(self, other: object) -> bool:
        # Structural equality: same labelled vertices and edges, whatever the internal numbering.
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and set(self.original_ids.tolist()) == set(other.original_ids.tolist())
            and self.edge_set() == other.edge_set()
        )

    __hash__ = None  # type: ignore[assignment]


def build_graph(
    edge_pairs: Iterable[tuple[int, int]],
    isolated: Iterable[int] = (),
) -> Graph:
    """
    Canonicalize an edge stream into a simple undirected Graph.

    Duplicates, reversed duplicates and self-loops are dropped. External IDs
    get internal IDs in order of first appearance; labels in ``isolated`` that
    never appear in an edge are appended as degree-0 vertices.
    """
    pairs = np.asarray(list(edge_pairs), dtype=np.int64).reshape(-1, 2)

    flat = pairs.ravel()
    labels, first_seen, inverse = np.unique(flat, return_index=True, return_inverse=True)
    appearance = np.argsort(first_seen, kind="stable")
    rank = np.empty_like(appearance)
    rank[appearance] = np.arange(len(appearance))
    original_ids = labels[appearance]
    endpoints = rank[inverse.reshape(-1)].reshape(-1, 2)

    known = set(original_ids.tolist())
    extra = [label for label in dict.fromkeys(int(x) for x in isolated) if label not in known]
    if extra:
        original_ids = np.concatenate([original_ids, np.asarray(extra, dtype=np.int64)])

    n = len(original_ids)
    src, dst = endpoints[:, 0], endpoints[:, 1]
    keep = src != dst
    lo = np.minimum(src[keep], dst[keep])
    hi = np.maximum(src[keep], dst[keep])
    keys = np.unique(lo * max(n, 1) + hi)
    lo, hi = keys // max(n, 1), keys % max(n, 1)
    m = len(keys)

    heads = np.concatenate([lo, hi])
    tails = np.concatenate([hi, lo])
    order = np.lexsort((tails, heads))
    id_dtype = np.uint32 if n <= _UINT32_MAX else np.int64
    adjacency = tails[order].astype(id_dtype)

    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(heads, minlength=n), out=offsets[1:])

    return Graph(n=n, m=m, offsets=offsets, adjacency=adjacency, original_ids=original_ids)
