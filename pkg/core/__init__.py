from core.graph import Graph, build_graph
from core.ordering import (
    DegeneracyOrder,
    NeighborhoodScratch,
    degeneracy_order,
    earlier_neighbors,
    later_neighbors,
    two_hop_earlier,
    two_hop_later,
)

__all__ = [
    "DegeneracyOrder",
    "Graph",
    "NeighborhoodScratch",
    "build_graph",
    "degeneracy_order",
    "earlier_neighbors",
    "later_neighbors",
    "two_hop_earlier",
    "two_hop_later",
]
