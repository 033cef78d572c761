"""
Constructive forcing sets for block-cycle, double-path, outerplanar and k-tree families
"""

from .base import (
    chains_force,
    chains_force_within,
    fallback_counts,
    finish,
    note_fallback,
    reset_fallbacks,
)
from .block_cycle import block_cycle_solution
from .double_paths import double_path_solution, series_paths_solution
from .double_trees import check_double_tree, double_tree_cut_pair
from .ktrees import chordal_psd_identity, k_cluster_parameters, k_tree_tree_cover_odd
from .models import Family, FamilySolution, KClusterParameters, TreeCoverShape
from .outerplanar import consecutive_or_pendant_trees, outerplanar_solution, tree_solution
from .vertex_sum import compose_vertex_sum, rooted_at
from .witnesses import p2_interval_witness

__all__ = [
    "Family",
    "FamilySolution",
    "KClusterParameters",
    "TreeCoverShape",
    "finish",
    "chains_force",
    "chains_force_within",
    "note_fallback",
    "fallback_counts",
    "reset_fallbacks",
    "block_cycle_solution",
    "double_path_solution",
    "series_paths_solution",
    "check_double_tree",
    "double_tree_cut_pair",
    "consecutive_or_pendant_trees",
    "outerplanar_solution",
    "tree_solution",
    "compose_vertex_sum",
    "rooted_at",
    "k_cluster_parameters",
    "k_tree_tree_cover_odd",
    "chordal_psd_identity",
    "p2_interval_witness",
]
