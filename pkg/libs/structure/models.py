"""
Pydantic models for structural certificates
"""

from enum import Enum
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field

from ..graphs.graph import VertexSet

Edge = Tuple[int, int]


class CertificateKind(str, Enum):
    BLOCK_CYCLE = "block_cycle"
    UNICYCLIC = "unicyclic"
    CHORDAL_PEO = "chordal_peo"
    K_TREE = "k_tree"
    K_CLUSTER = "k_cluster"
    DOUBLE_PATH = "double_path"
    SERIES_OF_PARALLEL_PATHS = "series_of_parallel_paths"


class BlockDecomposition(BaseModel):
    """Blocks ordered by smallest vertex; cycle blocks listed in cyclic order"""
    blocks: List[VertexSet]
    cut_vertices: VertexSet
    block_adjacency: List[Tuple[int, int]] = Field(default_factory=list)


class OuterEmbedding(BaseModel):
    """Vertex order around the outer face and the outer/inner edge split"""
    outer_order: VertexSet
    outer_edges: List[Edge] = Field(default_factory=list)
    inner_edges: List[Edge] = Field(default_factory=list)

    def edge_class(self, u: int, v: int) -> str:
        edge = (min(u, v), max(u, v))
        if edge in self.outer_edges:
            return "outer"
        if edge in self.inner_edges:
            return "inner"
        raise KeyError(edge)


class PendantBlockEvidence(BaseModel):
    tag: Literal["pendant_blocks"] = "pendant_blocks"
    blocks: List[VertexSet]
    # Block indices in removal order; the last one is never removed
    pendant_order: List[int]
    # Vertex each removed block shares with the rest (None for the last)
    attachments: List[Optional[int]]


class EliminationEvidence(BaseModel):
    tag: Literal["elimination"] = "elimination"
    peo: VertexSet


class ConstructionEvidence(BaseModel):
    tag: Literal["construction"] = "construction"
    k: int = Field(..., ge=1)
    base: VertexSet
    order: VertexSet
    attachments: List[VertexSet]
    is_cluster: bool = False
    cluster_base: Optional[VertexSet] = None
    s_sets: List[VertexSet] = Field(default_factory=list)


class PathSeriesEvidence(BaseModel):
    tag: Literal["path_series"] = "path_series"
    paths: List[VertexSet]
    embedding: Optional[OuterEmbedding] = None


Evidence = Union[PendantBlockEvidence, EliminationEvidence, ConstructionEvidence, PathSeriesEvidence]


class FamilyCertificate(BaseModel):
    """Recognition evidence that replays to membership"""
    kind: CertificateKind
    evidence: Evidence = Field(..., discriminator="tag")
