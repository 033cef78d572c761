"""
Exact solvers for Z, Z+, P, T and the edge clique cover number
"""

from typing import Callable, Dict, Iterable, Optional

from ..graphs.graph import Graph
from .base import NodeBudget, Parameter, ParameterResult, SearchStats
from .clique_cover import edge_clique_cover_number
from .covers import (
    covers_of_size,
    induced_parts,
    minimum_cover,
    path_cover_number,
    tree_cover_number,
)
from .forcing_numbers import (
    forcing_set_through,
    minimum_forcing_set,
    psd_forcing_number,
    zero_forcing_number,
)

SOLVERS: Dict[Parameter, Callable[..., ParameterResult]] = {
    Parameter.Z: zero_forcing_number,
    Parameter.Z_PLUS: psd_forcing_number,
    Parameter.P: path_cover_number,
    Parameter.T: tree_cover_number,
    Parameter.CC: edge_clique_cover_number,
}


def compute_parameters(
    graph: Graph, names: Iterable[Parameter], node_limit: Optional[int] = None
) -> Dict[Parameter, ParameterResult]:
    """Run the requested solvers in the order given"""
    return {Parameter(name): SOLVERS[Parameter(name)](graph, node_limit) for name in names}


__all__ = [
    "Parameter",
    "ParameterResult",
    "SearchStats",
    "NodeBudget",
    "SOLVERS",
    "compute_parameters",
    "minimum_forcing_set",
    "forcing_set_through",
    "zero_forcing_number",
    "psd_forcing_number",
    "minimum_cover",
    "covers_of_size",
    "path_cover_number",
    "tree_cover_number",
    "induced_parts",
    "edge_clique_cover_number",
]
