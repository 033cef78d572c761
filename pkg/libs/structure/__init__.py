"""
Structural recognition: blocks, outerplanarity, chordality, k-trees, double paths
"""

from .blocks import block_decomposition, classify_block_cycle, cycle_order, pendant_blocks
from .chordal import chordal_peo, is_chordal, maximum_cardinality_search
from .double_paths import double_path_certificate, find_path_series, is_double_path
from .ktrees import cluster_base, k_cluster_certificate, k_tree_certificate
from .models import (
    BlockDecomposition,
    CertificateKind,
    ConstructionEvidence,
    EliminationEvidence,
    FamilyCertificate,
    OuterEmbedding,
    PathSeriesEvidence,
    PendantBlockEvidence,
)
from .outerplanar import is_outerplanar, outerplanar_embedding, verify_outer_embedding
from .verify import verify_certificate

__all__ = [
    "BlockDecomposition",
    "OuterEmbedding",
    "FamilyCertificate",
    "CertificateKind",
    "PendantBlockEvidence",
    "EliminationEvidence",
    "ConstructionEvidence",
    "PathSeriesEvidence",
    "block_decomposition",
    "classify_block_cycle",
    "cycle_order",
    "pendant_blocks",
    "outerplanar_embedding",
    "is_outerplanar",
    "verify_outer_embedding",
    "chordal_peo",
    "is_chordal",
    "maximum_cardinality_search",
    "k_tree_certificate",
    "k_cluster_certificate",
    "cluster_base",
    "double_path_certificate",
    "find_path_series",
    "is_double_path",
    "verify_certificate",
]
