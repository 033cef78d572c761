"""
Chordality by maximum cardinality search
"""

from typing import List, Optional, Sequence

from ..forcing.covers import is_clique
from ..graphs.bits import mask_of
from ..graphs.graph import Graph, VertexSet
from .models import CertificateKind, EliminationEvidence, FamilyCertificate


def maximum_cardinality_search(graph: Graph) -> List[int]:
    """Visit order of MCS; ties go to the smallest vertex"""
    weight = [0] * graph.n
    visited = 0
    order: List[int] = []
    for _ in range(graph.n):
        v = max(
            (u for u in graph.vertices() if not visited >> u & 1),
            key=lambda u: (weight[u], -u),
        )
        order.append(v)
        visited |= 1 << v
        for w in graph.neighbours(v):
            if not visited >> w & 1:
                weight[w] += 1
    return order


def is_perfect_elimination_ordering(adjacency: Sequence[int], peo: Sequence[int]) -> bool:
    """Each vertex's neighbours later in the ordering form a clique"""
    later = mask_of(peo)
    for v in peo:
        later &= ~(1 << v)
        if not is_clique(adjacency, adjacency[v] & later):
            return False
    return True


def chordal_peo(graph: Graph) -> Optional[FamilyCertificate]:
    """Perfect elimination ordering (reverse MCS order) when the graph is chordal"""
    peo: VertexSet = tuple(reversed(maximum_cardinality_search(graph)))
    if not is_perfect_elimination_ordering(graph.adjacency, peo):
        return None
    return FamilyCertificate(
        kind=CertificateKind.CHORDAL_PEO, evidence=EliminationEvidence(peo=peo)
    )


def is_chordal(graph: Graph) -> bool:
    return chordal_peo(graph) is not None
