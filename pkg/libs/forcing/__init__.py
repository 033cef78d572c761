"""
Colour-change rules, forcing runs and cover extraction
"""

from .covers import (
    is_clique,
    is_induced_path,
    is_induced_tree,
    make_cover,
    path_order,
    reverse_chains,
    tree_order,
    validate_cover,
)
from .engine import (
    closure,
    derived_mask,
    extract_cover,
    guided_closure,
    is_forcing_set,
    legal_forces,
    replay,
    terminal_set,
)
from .models import Cover, CoverKind, Force, ForcingRun, Rule

__all__ = [
    "Rule",
    "Force",
    "ForcingRun",
    "Cover",
    "CoverKind",
    "closure",
    "guided_closure",
    "is_forcing_set",
    "extract_cover",
    "replay",
    "terminal_set",
    "derived_mask",
    "legal_forces",
    "validate_cover",
    "make_cover",
    "reverse_chains",
    "path_order",
    "tree_order",
    "is_induced_path",
    "is_induced_tree",
    "is_clique",
]
