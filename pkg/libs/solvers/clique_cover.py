"""
Exact edge clique cover number cc by branch and bound over maximal cliques
"""

from typing import List, Optional

import networkx as nx

from ..core.config import get_settings
from ..core.errors import SearchBudgetExceeded
from ..core.logging import get_logger, log_search_outcome
from ..forcing.covers import make_cover
from ..forcing.models import CoverKind
from ..graphs.bits import mask_of, members, popcount
from ..graphs.graph import Graph
from .base import NodeBudget, Parameter, ParameterResult, SearchStats

logger = get_logger(__name__)


def edge_clique_cover_number(
    graph: Graph, node_limit: Optional[int] = None
) -> ParameterResult:
    """Fewest cliques whose edges cover E(G); 0 for an edgeless graph.

    Some minimum cover uses maximal cliques only, so the branching is over
    the maximal cliques containing the uncovered edge with fewest options.
    """
    max_n = get_settings().clique_cover_max_vertices
    if graph.n > max_n:
        raise SearchBudgetExceeded("cc vertices", graph.n, max_n)
    budget = NodeBudget(Parameter.CC.value, node_limit)
    edges = graph.edges()
    index = {e: i for i, e in enumerate(edges)}
    cliques = sorted(
        (tuple(sorted(c)) for c in nx.find_cliques(graph.to_networkx()) if len(c) >= 2),
        key=lambda c: (-len(c), c),
    )
    clique_edges = [
        mask_of(index[(u, v)] for u in c for v in c if u < v) for c in cliques
    ]
    covering = [[j for j, m in enumerate(clique_edges) if m >> i & 1] for i in range(len(edges))]
    largest = max((popcount(m) for m in clique_edges), default=1)

    # greedy start
    best: List[int] = []
    left = (1 << len(edges)) - 1
    while left:
        j = max(range(len(cliques)), key=lambda j: (popcount(clique_edges[j] & left), -j))
        best.append(j)
        left &= ~clique_edges[j]

    def search(uncovered: int, chosen: List[int]) -> None:
        nonlocal best
        budget.tick()
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        floor = -(-popcount(uncovered) // largest)
        if len(chosen) + floor >= len(best):
            return
        edge = min(members(uncovered), key=lambda i: len(covering[i]))
        for j in covering[edge]:
            chosen.append(j)
            search(uncovered & ~clique_edges[j], chosen)
            chosen.pop()

    search((1 << len(edges)) - 1, [])
    cover = make_cover(graph, CoverKind.CLIQUE_EDGE_COVER, [cliques[j] for j in sorted(best)])
    lower = -(-len(edges) // largest) if edges else 0
    log_search_outcome(logger, Parameter.CC.value, cover.size, budget.nodes, lower, n=graph.n)
    return ParameterResult(
        parameter=Parameter.CC,
        value=cover.size,
        certificate=cover,
        stats=SearchStats(nodes=budget.nodes, lower_bound=lower, components=0),
    )
