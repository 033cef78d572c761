"""
Blocks, cut vertices and block-cycle recognition
"""

from typing import List, Optional, Sequence, Set

import networkx as nx

from ..core.errors import RecognitionError
from ..core.logging import get_logger
from ..graphs.bits import induced_edge_count, lowest, mask_of, members, popcount
from ..graphs.graph import Graph, VertexSet
from .models import BlockDecomposition, CertificateKind, FamilyCertificate, PendantBlockEvidence

logger = get_logger(__name__)


def cycle_order(adjacency: Sequence[int], mask: int) -> VertexSet:
    """Cyclic order of a cycle block from its smallest vertex toward the smaller neighbour"""
    start = lowest(mask)
    order = [start]
    previous, current = start, lowest(adjacency[start] & mask)
    while current != start:
        order.append(current)
        previous, current = current, lowest(adjacency[current] & mask & ~(1 << previous))
    return tuple(order)


def _is_cycle(adjacency: Sequence[int], mask: int) -> bool:
    size = popcount(mask)
    return (
        size >= 3
        and induced_edge_count(adjacency, mask) == size
        and all(popcount(adjacency[v] & mask) == 2 for v in members(mask))
    )


def block_decomposition(graph: Graph) -> BlockDecomposition:
    """Biconnected decomposition; isolated vertices are singleton blocks"""
    g = graph.to_networkx()
    found = [set(c) for c in nx.biconnected_components(g)]
    found += [{v} for v in graph.vertices() if graph.degree(v) == 0]
    masks = []
    for block in found:
        mask = mask_of(block)
        if _is_cycle(graph.adjacency, mask):
            masks.append(cycle_order(graph.adjacency, mask))
        else:
            masks.append(tuple(sorted(block)))
    blocks = sorted(masks, key=lambda b: tuple(sorted(b)))
    cut_vertices = tuple(sorted(nx.articulation_points(g)))
    sets = [set(b) for b in blocks]
    adjacency = [
        (i, j)
        for i in range(len(blocks))
        for j in range(i + 1, len(blocks))
        if sets[i] & sets[j]
    ]
    return BlockDecomposition(blocks=blocks, cut_vertices=cut_vertices, block_adjacency=adjacency)


def pendant_blocks(blocks: Sequence[VertexSet], remaining: Set[int]) -> List[int]:
    """Remaining blocks that share at most one vertex with the other remaining blocks"""
    found = []
    for i in sorted(remaining):
        shared = set()
        for j in remaining:
            if j != i:
                shared |= set(blocks[i]) & set(blocks[j])
        if len(shared) <= 1:
            found.append(i)
    return found


def is_block_cycle_block(adjacency: Sequence[int], block: VertexSet) -> bool:
    mask = mask_of(block)
    if len(block) <= 2:
        return induced_edge_count(adjacency, mask) == len(block) - 1
    return _is_cycle(adjacency, mask)


def classify_block_cycle(graph: Graph) -> Optional[FamilyCertificate]:
    """Pendant-block elimination certificate when every block is an edge or a cycle.

    The pendant block removed at each step is the one with the smallest
    minimum vertex label.
    """
    if not graph.is_connected():
        raise RecognitionError("block-cycle recognition needs a connected graph")
    if graph.n == 0:
        return None
    decomposition = block_decomposition(graph)
    blocks = decomposition.blocks
    if not all(is_block_cycle_block(graph.adjacency, b) for b in blocks):
        return None

    remaining = set(range(len(blocks)))
    order: List[int] = []
    attachments: List[Optional[int]] = []
    while len(remaining) > 1:
        candidates = pendant_blocks(blocks, remaining)
        chosen = min(candidates, key=lambda i: (min(blocks[i]), tuple(sorted(blocks[i]))))
        remaining.discard(chosen)
        rest = set().union(*(set(blocks[j]) for j in remaining))
        shared = set(blocks[chosen]) & rest
        order.append(chosen)
        attachments.append(min(shared))
    order.append(remaining.pop())
    attachments.append(None)

    cycles = sum(1 for b in blocks if len(b) >= 3)
    kind = CertificateKind.UNICYCLIC if cycles == 1 else CertificateKind.BLOCK_CYCLE
    logger.debug("block_cycle_recognised", n=graph.n, blocks=len(blocks), cycles=cycles)
    return FamilyCertificate(
        kind=kind,
        evidence=PendantBlockEvidence(
            blocks=blocks, pendant_order=order, attachments=attachments
        ),
    )
