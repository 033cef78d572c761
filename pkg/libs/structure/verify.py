"""
Certificate replay, one verifier per certificate kind
"""

from itertools import combinations
from typing import Set

from ..core.errors import CertificateError
from ..forcing.covers import is_clique, is_induced_path
from ..graphs.bits import mask_of, members
from ..graphs.graph import Graph
from .blocks import block_decomposition, is_block_cycle_block, pendant_blocks
from .chordal import is_perfect_elimination_ordering
from .double_paths import pair_is_double_path
from .models import (
    CertificateKind,
    ConstructionEvidence,
    EliminationEvidence,
    FamilyCertificate,
    PathSeriesEvidence,
    PendantBlockEvidence,
)
from .outerplanar import verify_outer_embedding


def _verify_pendant_blocks(graph: Graph, kind: CertificateKind, ev: PendantBlockEvidence) -> None:
    actual = {frozenset(b) for b in block_decomposition(graph).blocks}
    if {frozenset(b) for b in ev.blocks} != actual or len(ev.blocks) != len(actual):
        raise CertificateError("blocks differ from the biconnected decomposition")
    for block in ev.blocks:
        if not is_block_cycle_block(graph.adjacency, block):
            raise CertificateError(f"block {list(block)} is neither an edge nor a cycle")
        if len(block) >= 3:
            ring = list(block) + [block[0]]
            if not all(graph.has_edge(a, b) for a, b in zip(ring, ring[1:])):
                raise CertificateError(f"cycle block {list(block)} is not in cyclic order")
    if sorted(ev.pendant_order) != list(range(len(ev.blocks))):
        raise CertificateError("pendant order is not a permutation of the blocks")
    if len(ev.attachments) != len(ev.pendant_order):
        raise CertificateError("one attachment per removed block expected")

    remaining: Set[int] = set(range(len(ev.blocks)))
    for step, (index, attach) in enumerate(zip(ev.pendant_order, ev.attachments)):
        if len(remaining) == 1:
            if attach is not None:
                raise CertificateError("last block has an attachment vertex")
            break
        pendants = pendant_blocks(ev.blocks, remaining)
        if len(pendants) < 2:
            raise CertificateError(f"fewer than two pendant blocks at step {step}")
        if index not in pendants:
            raise CertificateError(f"block {index} is not pendant at step {step}")
        remaining.discard(index)
        rest = set().union(*(set(ev.blocks[j]) for j in remaining))
        if attach is None or {attach} != set(ev.blocks[index]) & rest:
            raise CertificateError(f"wrong attachment vertex for block {index}")

    cycles = sum(1 for b in ev.blocks if len(b) >= 3)
    if kind is CertificateKind.UNICYCLIC and cycles != 1:
        raise CertificateError("unicyclic certificate needs exactly one cycle block")


def _verify_construction(graph: Graph, kind: CertificateKind, ev: ConstructionEvidence) -> None:
    k = ev.k
    if len(ev.base) != k + 1 or len(ev.order) != len(ev.attachments):
        raise CertificateError("construction shape does not match k")
    rows = [0] * graph.n
    for u, v in combinations(ev.base, 2):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    present = mask_of(ev.base)
    for v, clique in zip(ev.order, ev.attachments):
        mask = mask_of(clique)
        if len(clique) != k or mask & ~present or not is_clique(rows, mask):
            raise CertificateError(f"vertex {v} does not attach to a k-clique")
        if present >> v & 1:
            raise CertificateError(f"vertex {v} added twice")
        for u in clique:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        present |= 1 << v
    if present != graph.full_mask or tuple(rows) != graph.adjacency:
        raise CertificateError("construction does not reconstruct the graph")

    if kind is CertificateKind.K_CLUSTER or ev.is_cluster:
        if ev.cluster_base is None:
            raise CertificateError("k-cluster without base clique")
        h = mask_of(ev.cluster_base)
        if len(ev.cluster_base) != k + 1 or not is_clique(graph.adjacency, h):
            raise CertificateError("cluster base is not a (k+1)-clique")
        outside = list(members(graph.full_mask & ~h))
        used = {tuple(members(graph.adjacency[v])) for v in outside}
        if any(graph.adjacency[v] & ~h for v in outside) or any(len(s) != k for s in used):
            raise CertificateError("an outside vertex attaches outside the base clique")
        if set(map(tuple, ev.s_sets)) != used or len(ev.s_sets) > k + 1:
            raise CertificateError("S(G) does not match the attachment sets")


def _verify_paths(graph: Graph, kind: CertificateKind, ev: PathSeriesEvidence) -> None:
    masks = [mask_of(p) for p in ev.paths]
    covered = 0
    for p, mask in zip(ev.paths, masks):
        if covered & mask or not is_induced_path(graph.adjacency, mask):
            raise CertificateError(f"path {list(p)} overlaps or is not an induced path")
        covered |= mask
    if covered != graph.full_mask:
        raise CertificateError("paths do not cover the graph")
    for i, mask in enumerate(masks):
        for j in range(i + 2, len(masks)):
            if any(graph.adjacency[v] & masks[j] for v in members(mask)):
                raise CertificateError(f"paths {i} and {j} are adjacent but not consecutive")
    for i in range(len(masks) - 1):
        if not pair_is_double_path(graph, masks[i], masks[i + 1]):
            raise CertificateError(f"paths {i} and {i + 1} do not induce a double path")
    if kind is CertificateKind.DOUBLE_PATH:
        if len(masks) != 2 or ev.embedding is None:
            raise CertificateError("double path needs two paths and an outer embedding")
        verify_outer_embedding(graph, ev.embedding)


def verify_certificate(graph: Graph, cert: FamilyCertificate) -> None:
    """Raise CertificateError unless the evidence replays to membership"""
    ev = cert.evidence
    if isinstance(ev, PendantBlockEvidence) and cert.kind in (
        CertificateKind.BLOCK_CYCLE,
        CertificateKind.UNICYCLIC,
    ):
        _verify_pendant_blocks(graph, cert.kind, ev)
    elif isinstance(ev, EliminationEvidence) and cert.kind is CertificateKind.CHORDAL_PEO:
        if sorted(ev.peo) != list(graph.vertices()):
            raise CertificateError("ordering is not a permutation of the vertices")
        if not is_perfect_elimination_ordering(graph.adjacency, ev.peo):
            raise CertificateError("ordering is not a perfect elimination ordering")
    elif isinstance(ev, ConstructionEvidence) and cert.kind in (
        CertificateKind.K_TREE,
        CertificateKind.K_CLUSTER,
    ):
        _verify_construction(graph, cert.kind, ev)
    elif isinstance(ev, PathSeriesEvidence) and cert.kind in (
        CertificateKind.DOUBLE_PATH,
        CertificateKind.SERIES_OF_PARALLEL_PATHS,
    ):
        _verify_paths(graph, cert.kind, ev)
    else:
        raise CertificateError(f"{cert.kind.value} certificate carries {ev.tag} evidence")
