"""
Graph representation, formats and elementary operations
"""

from .bits import component_masks, lowest, mask_of, members, popcount
from .formats import (
    parse_edge_list,
    parse_graph6,
    read_graph,
    read_graphs,
    to_dot,
    to_edge_list,
    to_graph6,
)
from .graph import Graph, VertexSet, empty_graph, from_edge_list
from .operations import components, induced_subgraph, relabel_back, vertex_sum

__all__ = [
    "Graph",
    "VertexSet",
    "from_edge_list",
    "empty_graph",
    "parse_graph6",
    "to_graph6",
    "parse_edge_list",
    "to_edge_list",
    "read_graph",
    "read_graphs",
    "to_dot",
    "induced_subgraph",
    "vertex_sum",
    "components",
    "relabel_back",
    "mask_of",
    "members",
    "popcount",
    "lowest",
    "component_masks",
]
