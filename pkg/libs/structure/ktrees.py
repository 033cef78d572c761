"""
k-tree and k-cluster recognition
"""

from itertools import combinations
from typing import List, Optional

from ..core.logging import get_logger
from ..forcing.covers import is_clique
from ..graphs.bits import mask_of, members, popcount
from ..graphs.graph import Graph, VertexSet
from .models import CertificateKind, ConstructionEvidence, FamilyCertificate

logger = get_logger(__name__)


def _expected_edges(n: int, k: int) -> int:
    return k * (k + 1) // 2 + (n - k - 1) * k


def cluster_base(graph: Graph, k: int) -> Optional[VertexSet]:
    """Lexicographically smallest (k+1)-clique H making G a k-cluster on H.

    Every vertex outside H has exactly k neighbours, all inside H, and no
    two outside vertices are adjacent.
    """
    if k < 1 or graph.n < k + 1 or graph.edge_count != _expected_edges(graph.n, k):
        return None
    adjacency = graph.adjacency
    for chosen in combinations(graph.vertices(), k + 1):
        h = mask_of(chosen)
        if not is_clique(adjacency, h):
            continue
        outside = graph.full_mask & ~h
        if all(
            popcount(adjacency[v]) == k and adjacency[v] & ~h == 0
            for v in members(outside)
        ):
            return chosen
    return None


def _s_sets(graph: Graph, base: VertexSet) -> List[VertexSet]:
    h = mask_of(base)
    found = {
        tuple(members(graph.adjacency[v]))
        for v in members(graph.full_mask & ~h)
    }
    return sorted(found)


def k_tree_certificate(graph: Graph, k: int) -> Optional[FamilyCertificate]:
    """Construction order of a k-tree, flagged as a k-cluster when one exists.

    Degree-k simplicial vertices are peeled (smallest label first) until a
    K_{k+1} remains; the construction order is the reverse.
    """
    if k < 1 or graph.n < k + 1 or graph.edge_count != _expected_edges(graph.n, k):
        return None
    adjacency = graph.adjacency
    alive = graph.full_mask
    peeled: List[int] = []
    attachments: List[VertexSet] = []
    while popcount(alive) > k + 1:
        for v in members(alive):
            nb = adjacency[v] & alive
            if popcount(nb) == k and is_clique(adjacency, nb):
                peeled.append(v)
                attachments.append(tuple(members(nb)))
                alive &= ~(1 << v)
                break
        else:
            return None
    if not is_clique(adjacency, alive):
        return None

    base = cluster_base(graph, k)
    evidence = ConstructionEvidence(
        k=k,
        base=tuple(members(alive)),
        order=tuple(reversed(peeled)),
        attachments=list(reversed(attachments)),
        is_cluster=base is not None,
        cluster_base=base,
        s_sets=_s_sets(graph, base) if base is not None else [],
    )
    kind = CertificateKind.K_CLUSTER if base is not None else CertificateKind.K_TREE
    logger.debug("k_tree_recognised", n=graph.n, k=k, cluster=base is not None)
    return FamilyCertificate(kind=kind, evidence=evidence)


def k_cluster_certificate(graph: Graph, k: int) -> Optional[FamilyCertificate]:
    """k-cluster view: the construction starts from H and attaches every other vertex"""
    base = cluster_base(graph, k)
    if base is None:
        return None
    h = mask_of(base)
    order = tuple(members(graph.full_mask & ~h))
    return FamilyCertificate(
        kind=CertificateKind.K_CLUSTER,
        evidence=ConstructionEvidence(
            k=k,
            base=base,
            order=order,
            attachments=[tuple(members(graph.adjacency[v])) for v in order],
            is_cluster=True,
            cluster_base=base,
            s_sets=_s_sets(graph, base),
        ),
    )
