"""
Deterministic seeded generators for the graph families under study
"""

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
from .rng import XorShift64Star
from .specs import GenFamily, GenSpec, build

__all__ = [
    "XorShift64Star",
    "canonical",
    "random_tree",
    "random_graph",
    "random_block_cycle",
    "random_unicyclic",
    "random_outerplanar",
    "random_k_tree",
    "random_k_cluster",
    "random_chordal",
    "random_series_parallel_paths",
    "GenFamily",
    "GenSpec",
    "build",
]
