"""
Exact path cover number P and tree cover number T.

The search always places the smallest uncovered vertex in a new part and
branches over every induced path (or tree) of the remaining graph that
contains it. Parts are grown one frontier vertex at a time, excluding the
frontier vertices skipped earlier, so each candidate part is produced once.
Results are memoised per remaining vertex mask; the number of components of
the remainder bounds the parts still needed.
"""

from typing import Dict, Iterator, List, Optional, Sequence

from ..core.logging import get_logger, log_search_outcome
from ..forcing.covers import is_induced_path, is_induced_tree, make_cover
from ..forcing.models import Cover, CoverKind
from ..graphs.bits import component_masks, lowest, members, popcount
from ..graphs.graph import Graph
from .base import NodeBudget, Parameter, ParameterResult, SearchStats

logger = get_logger(__name__)


def induced_parts(
    adjacency: Sequence[int], within: int, seed: int, paths_only: bool
) -> Iterator[int]:
    """Every induced tree (or path) of ``within`` that contains ``seed``"""

    def extend(part: int, blocked: int) -> Iterator[int]:
        yield part
        frontier = 0
        for u in members(part):
            frontier |= adjacency[u]
        frontier &= within & ~part & ~blocked
        for w in members(frontier):
            touching = adjacency[w] & part
            ok = touching & (touching - 1) == 0
            if ok and paths_only:
                anchor = touching.bit_length() - 1
                ok = popcount(adjacency[anchor] & part) <= 1
            if ok:
                yield from extend(part | 1 << w, blocked)
            blocked |= 1 << w

    yield from extend(1 << seed, 0)


class _CoverSearch:
    def __init__(self, adjacency: Sequence[int], paths_only: bool, budget: NodeBudget):
        self.adjacency = adjacency
        self.paths_only = paths_only
        self.budget = budget
        self.memo: Dict[int, List[int]] = {}

    def _fits(self, mask: int) -> bool:
        if self.paths_only:
            return is_induced_path(self.adjacency, mask)
        return is_induced_tree(self.adjacency, mask)

    def solve(self, mask: int) -> List[int]:
        if not mask:
            return []
        cached = self.memo.get(mask)
        if cached is not None:
            return cached
        self.budget.tick()
        comps = component_masks(self.adjacency, mask)
        if len(comps) > 1:
            result = [part for comp in comps for part in self.solve(comp)]
        elif self._fits(mask):
            result = [mask]
        else:
            result = self._branch(mask)
        self.memo[mask] = result
        return result

    def _branch(self, mask: int) -> List[int]:
        best: Optional[List[int]] = None
        seed = lowest(mask)
        for part in induced_parts(self.adjacency, mask, seed, self.paths_only):
            self.budget.tick()
            rest = mask & ~part
            if best is not None:
                # the whole component is not a part, so two is a floor
                if len(best) == 2:
                    break
                if 1 + len(component_masks(self.adjacency, rest)) >= len(best):
                    continue
            sub = self.solve(rest)
            if best is None or 1 + len(sub) < len(best):
                best = [part] + sub
        assert best is not None
        return best


def minimum_cover(
    graph: Graph, kind: CoverKind, node_limit: Optional[int] = None
) -> ParameterResult:
    """Minimum induced path or tree cover, additive over components"""
    paths_only = kind is CoverKind.PATH_COVER
    parameter = Parameter.P if paths_only else Parameter.T
    budget = NodeBudget(parameter.value, node_limit)
    search = _CoverSearch(graph.adjacency, paths_only, budget)
    comps = component_masks(graph.adjacency, graph.full_mask)
    parts = [part for comp in comps for part in search.solve(comp)]
    parts.sort(key=lowest)
    cover = make_cover(graph, kind, [tuple(members(p)) for p in parts])
    log_search_outcome(
        logger, parameter.value, cover.size, budget.nodes, len(comps), n=graph.n
    )
    return ParameterResult(
        parameter=parameter,
        value=cover.size,
        certificate=cover,
        stats=SearchStats(nodes=budget.nodes, lower_bound=len(comps), components=len(comps)),
    )


def path_cover_number(graph: Graph, node_limit: Optional[int] = None) -> ParameterResult:
    return minimum_cover(graph, CoverKind.PATH_COVER, node_limit)


def tree_cover_number(graph: Graph, node_limit: Optional[int] = None) -> ParameterResult:
    return minimum_cover(graph, CoverKind.TREE_COVER, node_limit)


def covers_of_size(
    graph: Graph, kind: CoverKind, size: int, node_limit: Optional[int] = None
) -> Iterator[Cover]:
    """Every induced path (or tree) cover with exactly ``size`` parts, each once"""
    paths_only = kind is CoverKind.PATH_COVER
    budget = NodeBudget(f"{kind.value} enumeration", node_limit)
    adjacency = graph.adjacency

    def place(mask: int, left: int) -> Iterator[List[int]]:
        if not mask:
            yield []
            return
        if len(component_masks(adjacency, mask)) > left:
            return
        for part in induced_parts(adjacency, mask, lowest(mask), paths_only):
            budget.tick()
            for rest in place(mask & ~part, left - 1):
                yield [part] + rest

    for parts in place(graph.full_mask, size):
        yield make_cover(graph, kind, [tuple(members(p)) for p in parts])
