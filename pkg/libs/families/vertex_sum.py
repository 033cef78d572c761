"""
Composing positive-rule solutions across a vertex sum.

With the identified vertex v black from the start, the white components of
G +_v H never cross v, so each side forces exactly as it does on its own.
Rooting both sides' trees through v at v therefore gives forcing trees of the
sum, with the two trees at v merged into one.
"""

from typing import List

from ..core.errors import CertificateError, FamilyConstructionError
from ..core.logging import get_logger
from ..forcing.covers import tree_order
from ..forcing.engine import closure, extract_cover
from ..forcing.models import Rule
from ..graphs.bits import mask_of
from ..graphs.operations import vertex_sum
from ..solvers.forcing_numbers import forcing_set_through
from .base import chains_force, finish, note_fallback
from .models import Family, FamilySolution

logger = get_logger(__name__)


def rooted_at(sol: FamilySolution, x: int) -> List[List[int]]:
    """Forcing trees of ``sol.graph``, as many as ``sol`` has, with ``x`` a root.

    The tree through x is re-rooted at x first. When the other roots no
    longer complete the forcing, a minimum positive forcing set containing x
    is searched for and its forcing trees are used instead.
    """
    graph = sol.graph
    graph.check_vertex(x)
    parts = [list(p) for p in sol.cover.parts]
    owner = next(i for i, p in enumerate(parts) if x in p)
    parts[owner] = list(tree_order(graph.adjacency, mask_of(parts[owner]), x))
    if chains_force(graph, Rule.POSITIVE, parts):
        return parts

    black = forcing_set_through(graph, x, Rule.POSITIVE, sol.value)
    if black is None:
        raise FamilyConstructionError(
            f"no positive forcing set of size {sol.value} contains vertex {x}"
        )
    note_fallback(logger, "vertex_sum_set_search", family=sol.family.value, vertex=x)
    return [list(p) for p in extract_cover(closure(graph, black, Rule.POSITIVE)).parts]


def compose_vertex_sum(
    sol_g: FamilySolution, sol_h: FamilySolution, v_g: int, v_h: int
) -> FamilySolution:
    """Solution on G +_v H with Z+(G) + Z+(H) - 1 trees"""
    for sol in (sol_g, sol_h):
        if sol.rule is not Rule.POSITIVE:
            raise CertificateError(f"{sol.family.value} solution is not a positive-rule solution")
    sol_g.graph.check_vertex(v_g)
    sol_h.graph.check_vertex(v_h)

    total, map_g, map_h = vertex_sum(sol_g.graph, sol_h.graph, v_g, v_h)
    v = map_g[v_g]
    parts: List[List[int]] = []
    merged = 0
    for sol, x, relabel in ((sol_g, v_g, map_g), (sol_h, v_h, map_h)):
        for part in rooted_at(sol, x):
            if part[0] == x:
                merged |= mask_of(relabel[w] for w in part)
            else:
                parts.append([relabel[w] for w in part])

    trees = [list(tree_order(total.adjacency, merged, v))] + parts
    if not chains_force(total, Rule.POSITIVE, trees):
        raise FamilyConstructionError(f"trees rooted at the identified vertex {v} stall")
    solution = finish(total, Family.VERTEX_SUM, Rule.POSITIVE, trees, ["Z+=T"])
    if solution.value != sol_g.value + sol_h.value - 1:
        raise FamilyConstructionError(
            f"composed value {solution.value} != {sol_g.value} + {sol_h.value} - 1"
        )
    return solution
