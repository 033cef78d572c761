"""
Elementary graph operations: induced subgraphs, vertex sums, components
"""

from typing import Dict, Iterable, List, Tuple

from .bits import component_masks, mask_of, members
from .graph import Graph, VertexSet, from_edge_list


def induced_subgraph(graph: Graph, subset: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Subgraph induced by ``subset``, relabelled 0..|S|-1 in ascending order.

    Returns the graph and the map old label -> new label.
    """
    chosen = sorted(set(subset))
    graph.check_vertices(chosen)
    relabel = {old: new for new, old in enumerate(chosen)}
    keep = mask_of(chosen)
    pairs = [
        (relabel[u], relabel[v])
        for u in chosen
        for v in members(graph.adjacency[u] & keep)
        if u < v
    ]
    return from_edge_list(len(chosen), pairs), relabel


def vertex_sum(
    g: Graph, h: Graph, vg: int, vh: int
) -> Tuple[Graph, Dict[int, int], Dict[int, int]]:
    """Identify ``vg`` of G with ``vh`` of H.

    G keeps its labels; the other vertices of H follow in ascending order.
    Returns the sum with the embedding maps of G and H.
    """
    g.check_vertex(vg)
    h.check_vertex(vh)
    map_g = {v: v for v in g.vertices()}
    map_h: Dict[int, int] = {}
    next_label = g.n
    for v in h.vertices():
        if v == vh:
            map_h[v] = vg
        else:
            map_h[v] = next_label
            next_label += 1
    pairs = list(g.edges()) + [(map_h[u], map_h[v]) for u, v in h.edges()]
    return from_edge_list(g.n + h.n - 1, pairs), map_g, map_h


def components(graph: Graph) -> List[VertexSet]:
    """Connected components, ordered by smallest member"""
    return [tuple(members(c)) for c in component_masks(graph.adjacency, graph.full_mask)]


def relabel_back(parts: Iterable[Iterable[int]], relabel: Dict[int, int]) -> List[List[int]]:
    """Map parts expressed in subgraph labels back to the parent graph"""
    inverse = {new: old for old, new in relabel.items()}
    return [[inverse[v] for v in part] for part in parts]
