"""
Serializable generator requests
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field

from ..core.config import get_settings
from ..core.errors import ParameterRangeError
from ..families.witnesses import p2_interval_witness
from ..graphs.graph import Graph
from .canonical import canonical
from .random_graphs import (
    random_block_cycle,
    random_chordal,
    random_graph,
    random_k_cluster,
    random_k_tree,
    random_outerplanar,
    random_series_parallel_paths,
    random_tree,
    random_unicyclic,
)


class GenFamily(str, Enum):
    """Graph family tags accepted by ``build``"""
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    GRID = "grid"
    STAR = "star"
    FAN = "fan"
    TREE = "tree"
    GNP = "gnp"
    BLOCK_CYCLE = "block_cycle"
    UNICYCLIC = "unicyclic"
    OUTERPLANAR = "outerplanar"
    K_TREE = "k_tree"
    K_CLUSTER = "k_cluster"
    CHORDAL = "chordal"
    SERIES_PATHS = "series_paths"
    P2_INTERVAL = "p2_interval"


class GenSpec(BaseModel):
    """One reproducible graph: family tag, size parameters and seed"""
    family: GenFamily
    n: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    blocks: Optional[int] = None
    max_cycle: int = 5
    cycle_length: Optional[int] = None
    p: float = 0.5
    inner_keep: float = 0.5
    outer_drop: float = 0.0
    cluster_only: bool = False
    attachments: Optional[int] = None
    extra: Optional[int] = None
    deletions: int = 0
    lengths: List[int] = Field(default_factory=list)
    aligned: bool = False
    seed: int = Field(default_factory=lambda: get_settings().default_seed)


def _need(spec: GenSpec, *names: str) -> List[int]:
    values = [getattr(spec, name) for name in names]
    missing = [name for name, value in zip(names, values) if value is None]
    if missing:
        raise ParameterRangeError(f"{spec.family.value} needs {', '.join(missing)}")
    return values


def build(spec: GenSpec) -> Graph:
    """Graph described by ``spec``; identical specs give identical graphs"""
    family = spec.family
    if family in (GenFamily.PATH, GenFamily.CYCLE, GenFamily.COMPLETE, GenFamily.STAR, GenFamily.FAN):
        return canonical(family.value, *_need(spec, "n"))
    if family in (GenFamily.COMPLETE_BIPARTITE, GenFamily.GRID):
        return canonical(family.value, *_need(spec, "m", "n"))
    if family is GenFamily.TREE:
        (n,) = _need(spec, "n")
        return random_tree(n, spec.seed)
    if family is GenFamily.GNP:
        (n,) = _need(spec, "n")
        return random_graph(n, spec.p, spec.seed)
    if family is GenFamily.BLOCK_CYCLE:
        (blocks,) = _need(spec, "blocks")
        return random_block_cycle(blocks, spec.max_cycle, spec.seed)
    if family is GenFamily.UNICYCLIC:
        n, cycle_length = _need(spec, "n", "cycle_length")
        return random_unicyclic(n, cycle_length, spec.seed)
    if family is GenFamily.OUTERPLANAR:
        (n,) = _need(spec, "n")
        return random_outerplanar(n, spec.inner_keep, spec.seed, spec.outer_drop)
    if family is GenFamily.K_TREE:
        n, k = _need(spec, "n", "k")
        return random_k_tree(n, k, spec.cluster_only, spec.seed)
    if family is GenFamily.K_CLUSTER:
        k, attachments, extra = _need(spec, "k", "attachments", "extra")
        return random_k_cluster(k, attachments, extra, spec.seed)
    if family is GenFamily.CHORDAL:
        n, k = _need(spec, "n", "k")
        return random_chordal(n, k, spec.deletions, spec.seed)
    if family is GenFamily.SERIES_PATHS:
        return random_series_parallel_paths(
            len(spec.lengths), spec.lengths, spec.seed, spec.aligned
        )
    m, n, k = _need(spec, "m", "n", "k")
    return p2_interval_witness(m, n, k)
