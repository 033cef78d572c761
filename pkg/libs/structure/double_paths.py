"""
Double paths and series of parallel paths.

A double path is a connected outerplanar graph that is not a path and whose
vertices are covered by two induced paths. A series P_1..P_k has edges only
inside a path or between consecutive paths, and every consecutive pair
induces a double path.
"""

from typing import List, Optional

from ..core.config import get_settings
from ..core.errors import RecognitionError
from ..core.logging import get_logger
from ..forcing.covers import is_induced_path, path_order
from ..graphs.bits import lowest, members
from ..graphs.graph import Graph, VertexSet
from ..graphs.operations import induced_subgraph
from ..solvers.base import NodeBudget
from ..solvers.covers import induced_parts, path_cover_number
from .models import CertificateKind, FamilyCertificate, PathSeriesEvidence
from .outerplanar import outerplanar_embedding

logger = get_logger(__name__)


def is_double_path(graph: Graph) -> bool:
    """Connected, outerplanar, not a path, and 2-path-coverable"""
    if graph.n < 3 or not graph.is_connected():
        return False
    if is_induced_path(graph.adjacency, graph.full_mask):
        return False
    if outerplanar_embedding(graph) is None:
        return False
    return path_cover_number(graph).value == 2


def pair_is_double_path(graph: Graph, first: int, second: int) -> bool:
    sub, _ = induced_subgraph(graph, members(first | second))
    if not sub.is_connected() or is_induced_path(sub.adjacency, sub.full_mask):
        return False
    return outerplanar_embedding(sub) is not None


def _neighbourhood(graph: Graph, mask: int) -> int:
    grown = 0
    for v in members(mask):
        grown |= graph.adjacency[v]
    return grown & ~mask


def find_path_series(graph: Graph, node_limit: Optional[int] = None) -> Optional[List[VertexSet]]:
    """Series with the fewest paths (at least three), or None"""
    limit = node_limit if node_limit is not None else get_settings().structure_node_limit
    budget = NodeBudget("series of parallel paths", limit)
    adjacency = graph.adjacency
    full = graph.full_mask
    best: Optional[List[int]] = None

    def extend(paths: List[int], used: int) -> bool:
        nonlocal best
        budget.tick()
        if used == full:
            if len(paths) >= 3 and (best is None or len(paths) < len(best)):
                best = list(paths)
            return best is not None and len(best) == 3
        if best is not None and len(paths) + 1 >= len(best):
            return False
        need = _neighbourhood(graph, paths[-1]) & ~used
        if not need:
            return False
        for part in induced_parts(adjacency, full & ~used, lowest(need), True):
            budget.tick()
            if part & need != need or not pair_is_double_path(graph, paths[-1], part):
                continue
            if extend(paths + [part], used | part):
                return True
        return False

    for seed in graph.vertices():
        for first in induced_parts(adjacency, full, seed, True):
            if lowest(first) != seed:
                continue
            if extend([first], first):
                break
        else:
            continue
        break

    if best is None:
        return None
    return [path_order(adjacency, p) for p in best]


def double_path_certificate(
    graph: Graph, node_limit: Optional[int] = None
) -> Optional[FamilyCertificate]:
    """Double-path certificate, else the smallest series of parallel paths, else None"""
    if not graph.is_connected():
        raise RecognitionError("double-path recognition needs a connected graph")
    if is_induced_path(graph.adjacency, graph.full_mask):
        raise RecognitionError("graph is a path")

    embedding = outerplanar_embedding(graph)
    if embedding is not None:
        limit = node_limit if node_limit is not None else get_settings().structure_node_limit
        result = path_cover_number(graph, limit)
        if result.value == 2:
            return FamilyCertificate(
                kind=CertificateKind.DOUBLE_PATH,
                evidence=PathSeriesEvidence(paths=result.cover.parts, embedding=embedding),
            )
    series = find_path_series(graph, node_limit)
    if series is None:
        return None
    logger.debug("path_series_found", n=graph.n, paths=len(series))
    return FamilyCertificate(
        kind=CertificateKind.SERIES_OF_PARALLEL_PATHS,
        evidence=PathSeriesEvidence(paths=series),
    )
