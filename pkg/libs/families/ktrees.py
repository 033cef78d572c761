"""
k-cluster formulas, the odd-k tree cover of k-trees, and the chordal identity
"""

from typing import List

from ..core.errors import CertificateError, FamilyConstructionError
from ..forcing.covers import is_induced_tree, make_cover
from ..forcing.models import Cover, CoverKind
from ..graphs.bits import mask_of, popcount
from ..graphs.graph import Graph
from ..solvers.clique_cover import edge_clique_cover_number
from ..structure.models import CertificateKind, ConstructionEvidence, FamilyCertificate
from ..structure.verify import verify_certificate
from .models import KClusterParameters


def k_cluster_parameters(cert: FamilyCertificate) -> KClusterParameters:
    """Z+ and T of a k-cluster from k and |S(G)|"""
    evidence = cert.evidence
    if (
        cert.kind is not CertificateKind.K_CLUSTER
        or not isinstance(evidence, ConstructionEvidence)
        or not evidence.is_cluster
    ):
        raise CertificateError("expected a k-cluster certificate")
    k = evidence.k
    s = len(evidence.s_sets)
    if s > k + 1:
        raise CertificateError(f"|S(G)| = {s} exceeds k + 1 = {k + 1}")
    z_plus = k + 1 if s >= 3 else k
    half = -(-(k + 1) // 2)
    if k % 2 == 1:
        t = (k + 1) // 2
    elif s == k + 1:
        t = half + 1
    else:
        t = half
    return KClusterParameters(k=k, s_size=s, z_plus=z_plus, t=t)


def k_tree_tree_cover_odd(graph: Graph, cert: FamilyCertificate, k: int) -> Cover:
    """Tree cover of size (k+1)/2 grown along the construction order.

    The base clique is split into pairs; each new vertex joins the one part
    meeting its attachment clique in a single vertex.
    """
    if k % 2 == 0:
        raise FamilyConstructionError(f"the pairing construction needs odd k, got {k}")
    evidence = cert.evidence
    if cert.kind not in (CertificateKind.K_TREE, CertificateKind.K_CLUSTER) or not isinstance(
        evidence, ConstructionEvidence
    ):
        raise CertificateError("expected a k-tree certificate")
    if evidence.k != k:
        raise CertificateError(f"certificate is for k={evidence.k}, not {k}")
    verify_certificate(graph, cert)

    base = list(evidence.base)
    parts: List[List[int]] = [base[i:i + 2] for i in range(0, len(base), 2)]
    masks = [mask_of(p) for p in parts]
    for v, clique in zip(evidence.order, evidence.attachments):
        c = mask_of(clique)
        single = [i for i, m in enumerate(masks) if popcount(m & c) == 1]
        if len(single) != 1:
            raise FamilyConstructionError(
                f"vertex {v}: {len(single)} parts meet its clique in one vertex"
            )
        i = single[0]
        parts[i].append(v)
        masks[i] |= 1 << v
        if not is_induced_tree(graph.adjacency, masks[i]):
            raise FamilyConstructionError(f"vertex {v} closes a cycle in part {i}")
    return make_cover(graph, CoverKind.TREE_COVER, parts, roots=[p[0] for p in parts])


def chordal_psd_identity(graph: Graph, cert: FamilyCertificate) -> int:
    """Predicted Z+ of a chordal graph: n - cc(G)"""
    if cert.kind is not CertificateKind.CHORDAL_PEO:
        raise CertificateError("expected a chordal certificate")
    verify_certificate(graph, cert)
    return graph.n - edge_clique_cover_number(graph).value
