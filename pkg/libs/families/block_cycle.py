"""
Z = P for block-cycle graphs by pendant-block induction.

Blocks are re-attached in reverse pendant order while a chain system (an
ordered path cover whose first vertices force along the chains) is kept for
the graph built so far.

  edge uv, u terminal in its chain   -> append v to that chain
  edge uv, u starts its chain        -> reverse every chain, then append v
  edge uv, u inner                   -> if some minimum path cover has u as
                                        an endpoint, switch to such a cover
                                        and re-orient it; else add chain [v]
  cycle at u, u terminal             -> run the chain around the cycle and
                                        start the last cycle vertex as [w]
  cycle at u, otherwise              -> new chain from a neighbour of u
                                        around the rest of the cycle
"""

from itertools import product
from typing import List, Optional, Sequence

from ..core.errors import CertificateError, FamilyConstructionError
from ..core.logging import get_logger
from ..forcing.engine import closure, extract_cover
from ..forcing.models import Rule
from ..graphs.bits import mask_of, members
from ..graphs.graph import Graph, VertexSet
from ..graphs.operations import induced_subgraph, relabel_back
from ..solvers.covers import path_cover_number
from ..solvers.forcing_numbers import zero_forcing_number
from ..structure.models import CertificateKind, FamilyCertificate, PendantBlockEvidence
from ..structure.verify import verify_certificate
from .base import chains_force_within, finish, note_fallback
from .models import Family, FamilySolution

logger = get_logger(__name__)

Chains = List[List[int]]


def _base_chains(block: VertexSet) -> Chains:
    if len(block) <= 2:
        return [list(block)]
    return [[block[0]], list(block[1:])]


def _orient(graph: Graph, present: int, parts: Sequence[Sequence[int]]) -> Optional[Chains]:
    vertices = list(members(present))
    for flips in product((False, True), repeat=len(parts)):
        oriented = [list(reversed(p)) if f else list(p) for p, f in zip(parts, flips)]
        if chains_force_within(graph, vertices, Rule.STANDARD, oriented):
            return oriented
    return None


def _orient_like(chains: Chains, parts: Sequence[Sequence[int]], v: int) -> Chains:
    """Direct a new cover the way the current chains run.

    A part equal to a current chain keeps its direction, the part holding
    the pendant vertex v ends at v, and any other part starts at a current
    start when one of its ends is one.
    """
    known = {frozenset(c): c for c in chains}
    starts = {c[0] for c in chains}
    oriented: Chains = []
    for part in parts:
        path = list(part)
        if frozenset(path) in known:
            oriented.append(list(known[frozenset(path)]))
        elif v in path:
            oriented.append(path if path[-1] == v else path[::-1])
        elif path[-1] in starts and path[0] not in starts:
            oriented.append(path[::-1])
        else:
            oriented.append(path)
    return oriented


def _switch_cover(graph: Graph, present: int, chains: Chains, v: int) -> Optional[Chains]:
    """Chain system with as many chains as ``chains`` once pendant v is present.

    None when the minimum path cover needs one more chain.
    """
    sub, relabel = induced_subgraph(graph, members(present))
    target = len(chains)
    optimum = path_cover_number(sub)
    if optimum.value != target:
        return None
    parts = relabel_back(optimum.cover.parts, relabel)
    oriented = _orient_like(chains, parts, v)
    if chains_force_within(graph, members(present), Rule.STANDARD, oriented):
        return oriented

    note_fallback(logger, "block_cycle_orientation_search", n=sub.n, target=target)
    searched = _orient(graph, present, parts)
    if searched is not None:
        return searched
    # no orientation of this cover forces; take the chains of a minimum forcing set
    note_fallback(logger, "block_cycle_chain_search", n=sub.n, target=target)
    zfs = zero_forcing_number(sub)
    if zfs.value != target:
        raise FamilyConstructionError(
            f"block-cycle step: Z={zfs.value} differs from P={target} on {sub!r}"
        )
    found = extract_cover(closure(sub, zfs.forcing_set, Rule.STANDARD)).parts
    return [list(c) for c in relabel_back(found, relabel)]


def _attach(graph: Graph, present: int, chains: Chains, block: VertexSet, u: int) -> Chains:
    index = next(i for i, c in enumerate(chains) if u in c)
    chain = chains[index]
    if len(block) == 2:
        v = block[0] if block[1] == u else block[1]
        if chain[-1] == u:
            return chains[:index] + [chain + [v]] + chains[index + 1:]
        if chain[0] == u:
            flipped = [list(reversed(c)) for c in chains]
            flipped[index].append(v)
            if chains_force_within(graph, members(present), Rule.STANDARD, flipped):
                return flipped
        switched = _switch_cover(graph, present, chains, v)
        if switched is not None:
            return switched
        return chains + [[v]]

    start = block.index(u)
    ring = list(block[start:] + block[:start])
    if chain[-1] == u:
        extended = chain + ring[1:-1]
        return chains[:index] + [extended] + chains[index + 1:] + [[ring[-1]]]
    return chains + [ring[1:]]


def block_cycle_solution(graph: Graph, cert: FamilyCertificate) -> FamilySolution:
    """Forcing set and path cover of equal size for a block-cycle graph"""
    if cert.kind not in (CertificateKind.BLOCK_CYCLE, CertificateKind.UNICYCLIC):
        raise CertificateError(f"expected a block-cycle certificate, got {cert.kind.value}")
    verify_certificate(graph, cert)
    evidence = cert.evidence
    assert isinstance(evidence, PendantBlockEvidence)

    order = list(reversed(evidence.pendant_order))
    attachments = list(reversed(evidence.attachments))
    root = evidence.blocks[order[0]]
    chains = _base_chains(root)
    present = mask_of(root)
    for index, u in zip(order[1:], attachments[1:]):
        block = evidence.blocks[index]
        present |= mask_of(block)
        assert u is not None
        chains = _attach(graph, present, chains, block, u)

    family = Family.UNICYCLIC if cert.kind is CertificateKind.UNICYCLIC else Family.BLOCK_CYCLE
    solution = finish(graph, family, Rule.STANDARD, chains, ["Z=P"])
    logger.debug("block_cycle_solved", n=graph.n, value=solution.value)
    return solution
