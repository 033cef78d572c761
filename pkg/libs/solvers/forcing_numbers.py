"""
Exact Z and Z+ by ascending-cardinality subset search, one component at a time
"""

from itertools import combinations
from typing import Optional

from ..core.logging import get_logger, log_search_outcome
from ..forcing.engine import derived_mask
from ..forcing.models import Rule
from ..graphs.bits import component_masks, mask_of, members, popcount
from ..graphs.graph import Graph, VertexSet
from .base import NodeBudget, Parameter, ParameterResult, SearchStats

logger = get_logger(__name__)


def _component_minimum(graph: Graph, comp: int, rule: Rule, budget: NodeBudget) -> tuple:
    vertices = list(members(comp))
    if len(vertices) == 1:
        return tuple(vertices), 1
    adjacency = graph.adjacency
    if rule is Rule.STANDARD:
        # min degree is a lower bound for Z
        start = min(popcount(adjacency[v] & comp) for v in vertices)
    else:
        start = 1
    for size in range(start, len(vertices)):
        for chosen in combinations(vertices, size):
            budget.tick()
            if derived_mask(adjacency, mask_of(chosen), rule, comp) == comp:
                return chosen, start
    # unreachable for connected components with two or more vertices
    return tuple(vertices[:-1]), start


def minimum_forcing_set(
    graph: Graph, rule: Rule, node_limit: Optional[int] = None
) -> ParameterResult:
    """Smallest forcing set under ``rule``, summed over components.

    Within each component, candidate sets are tried in lexicographic order,
    so the certificate is the lexicographically first minimum set.
    """
    parameter = Parameter.Z if rule is Rule.STANDARD else Parameter.Z_PLUS
    budget = NodeBudget(parameter.value, node_limit)
    chosen = []
    lower = 0
    comps = component_masks(graph.adjacency, graph.full_mask)
    for comp in comps:
        found, bound = _component_minimum(graph, comp, rule, budget)
        chosen.extend(found)
        lower += bound
    certificate = tuple(sorted(chosen))
    log_search_outcome(
        logger, parameter.value, len(certificate), budget.nodes, lower, n=graph.n
    )
    return ParameterResult(
        parameter=parameter,
        value=len(certificate),
        certificate=certificate,
        stats=SearchStats(nodes=budget.nodes, lower_bound=lower, components=len(comps)),
    )


def zero_forcing_number(graph: Graph, node_limit: Optional[int] = None) -> ParameterResult:
    return minimum_forcing_set(graph, Rule.STANDARD, node_limit)


def psd_forcing_number(graph: Graph, node_limit: Optional[int] = None) -> ParameterResult:
    return minimum_forcing_set(graph, Rule.POSITIVE, node_limit)


def forcing_set_through(
    graph: Graph, vertex: int, rule: Rule, size: int, node_limit: Optional[int] = None
) -> Optional[VertexSet]:
    """Lexicographically first forcing set of ``size`` vertices that contains ``vertex``"""
    graph.check_vertex(vertex)
    budget = NodeBudget(f"forcing set through {vertex}", node_limit)
    others = [v for v in graph.vertices() if v != vertex]
    for rest in combinations(others, max(0, size - 1)):
        budget.tick()
        black = mask_of(rest) | 1 << vertex
        if derived_mask(graph.adjacency, black, rule) == graph.full_mask:
            return tuple(sorted(rest + (vertex,)))
    return None
