"""
Outerplanarity via planarity of the graph plus an apex vertex.

G is outerplanar iff G + apex (adjacent to every vertex) is planar. The apex
rotation then gives the order of the vertices around the outer face, and the
edges on faces incident to the apex are the outer edges.
"""

from typing import Dict, Optional, Sequence, Tuple

import networkx as nx

from ..core.errors import CertificateError, RecognitionError
from ..graphs.graph import Graph
from .models import OuterEmbedding


def _crosses(pos: Dict[int, int], e: Tuple[int, int], f: Tuple[int, int]) -> bool:
    a, b = sorted((pos[e[0]], pos[e[1]]))
    c, d = sorted((pos[f[0]], pos[f[1]]))
    if len({a, b, c, d}) < 4:
        return False
    return a < c < b < d or c < a < d < b


def outerplanar_embedding(graph: Graph) -> Optional[OuterEmbedding]:
    """Outer-face witness, or None when the graph is not outerplanar"""
    if not graph.is_connected():
        raise RecognitionError("outerplanar embedding needs a connected graph")
    if graph.n <= 2:
        return OuterEmbedding(outer_order=tuple(graph.vertices()), outer_edges=graph.edges())
    g = graph.to_networkx()
    apex = graph.n
    g.add_edges_from((apex, v) for v in graph.vertices())
    planar, embedding = nx.check_planarity(g)
    if not planar:
        return None

    rotation = list(embedding.neighbors_cw_order(apex))
    start = rotation.index(min(rotation))
    order = rotation[start:] + rotation[:start]
    outer = set()
    for v in order:
        face = embedding.traverse_face(apex, v)
        ring = [w for w in face if w != apex]
        for a, b in zip(ring, ring[1:]):
            outer.add((min(a, b), max(a, b)))
    edges = graph.edges()
    return OuterEmbedding(
        outer_order=tuple(order),
        outer_edges=[e for e in edges if e in outer],
        inner_edges=[e for e in edges if e not in outer],
    )


def is_outerplanar(graph: Graph) -> bool:
    return outerplanar_embedding(graph) is not None


def verify_outer_embedding(graph: Graph, embedding: OuterEmbedding) -> None:
    """Raise CertificateError unless the witness is a valid outer embedding"""
    order = list(embedding.outer_order)
    if sorted(order) != list(graph.vertices()):
        raise CertificateError("outer order is not a permutation of the vertices")
    edges = graph.edges()
    outer, inner = set(embedding.outer_edges), set(embedding.inner_edges)
    if outer & inner or outer | inner != set(edges):
        raise CertificateError("edge classes do not partition the edge set")
    n = len(order)
    if n >= 3:
        for i, v in enumerate(order):
            w = order[(i + 1) % n]
            if graph.has_edge(v, w) and (min(v, w), max(v, w)) not in outer:
                raise CertificateError(f"edge {{{v},{w}}} joins consecutive vertices but is inner")
    pos = {v: i for i, v in enumerate(order)}
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if _crosses(pos, e, f):
                raise CertificateError(f"edges {e} and {f} cross")


def outer_neighbours(embedding: OuterEmbedding, v: int) -> Sequence[int]:
    return [b if a == v else a for a, b in embedding.outer_edges if v in (a, b)]
