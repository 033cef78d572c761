"""
Left endpoints of the covering paths of a double path or series of parallel paths.

Drawn without crossings, consecutive covering paths run side by side and
every rung between them is monotone: walking one path left to right, the
rung ends on the other path never move back. That fixes the left end of each
path once the first path's direction is chosen.
"""

from itertools import product
from typing import List, Optional, Sequence

from ..core.errors import CertificateError, FamilyConstructionError
from ..core.logging import get_logger
from ..forcing.models import Rule
from ..graphs.bits import members
from ..graphs.graph import Graph
from ..structure.models import CertificateKind, FamilyCertificate, PathSeriesEvidence
from ..structure.verify import verify_certificate
from .base import chains_force, finish, note_fallback
from .models import Family, FamilySolution

logger = get_logger(__name__)


def _monotone(adjacency: Sequence[int], left: Sequence[int], right: Sequence[int]) -> bool:
    position = {w: j for j, w in enumerate(right)}
    rungs = sorted(
        (i, position[w]) for i, u in enumerate(left) for w in members(adjacency[u]) if w in position
    )
    return all(a[1] <= b[1] for a, b in zip(rungs, rungs[1:]))


def orient_parallel(
    adjacency: Sequence[int], left: Sequence[int], right: Sequence[int]
) -> Optional[List[int]]:
    """``right`` directed so no two rungs from ``left`` cross; None if neither direction works"""
    for candidate in (list(right), list(reversed(right))):
        if _monotone(adjacency, left, candidate):
            return candidate
    return None


def left_to_right(
    adjacency: Sequence[int], paths: Sequence[Sequence[int]]
) -> Optional[List[List[int]]]:
    """Every path of a series directed left to right, the first one as given"""
    oriented = [list(paths[0])]
    for path in paths[1:]:
        step = orient_parallel(adjacency, oriented[-1], path)
        if step is None:
            return None
        oriented.append(step)
    return oriented


def _search_orientation(graph: Graph, paths: Sequence[Sequence[int]]) -> Optional[List[List[int]]]:
    for flips in product((False, True), repeat=len(paths)):
        oriented = [list(reversed(p)) if f else list(p) for p, f in zip(paths, flips)]
        if chains_force(graph, Rule.STANDARD, oriented):
            return oriented
    return None


def double_path_solution(graph: Graph, cert: FamilyCertificate) -> FamilySolution:
    """Start every covering path at its left end; the paths are the forcing chains"""
    if cert.kind not in (CertificateKind.DOUBLE_PATH, CertificateKind.SERIES_OF_PARALLEL_PATHS):
        raise CertificateError(f"expected a path-series certificate, got {cert.kind.value}")
    verify_certificate(graph, cert)
    evidence = cert.evidence
    assert isinstance(evidence, PathSeriesEvidence)
    paths = evidence.paths
    k = len(paths)

    oriented = left_to_right(graph.adjacency, paths)
    if oriented is None or not chains_force(graph, Rule.STANDARD, oriented):
        note_fallback(logger, "path_series_orientation_search", n=graph.n, paths=k)
        oriented = _search_orientation(graph, paths)
        if oriented is None:
            raise FamilyConstructionError(f"no orientation of the {k} covering paths forces")
    if cert.kind is CertificateKind.DOUBLE_PATH:
        return finish(graph, Family.DOUBLE_PATH, Rule.STANDARD, oriented, ["Z=P=2"])
    return finish(graph, Family.SERIES_OF_PARALLEL_PATHS, Rule.STANDARD, oriented, [f"Z<={k}"])


def series_paths_solution(graph: Graph, cert: FamilyCertificate) -> FamilySolution:
    if cert.kind is not CertificateKind.SERIES_OF_PARALLEL_PATHS:
        raise CertificateError(f"expected a series certificate, got {cert.kind.value}")
    return double_path_solution(graph, cert)
