"""
Shared verification for family constructions
"""

from collections import Counter
from typing import Any, Dict, Iterable, List, Sequence

from structlog.typing import FilteringBoundLogger

from ..core.errors import CertificateError, FamilyConstructionError
from ..forcing.covers import make_cover
from ..forcing.engine import extract_cover, guided_closure, is_forcing_set
from ..forcing.models import CoverKind, Rule
from ..graphs.graph import Graph
from ..graphs.operations import induced_subgraph
from .models import Family, FamilySolution

# Constructions that fell back to a search, by event name
_fallbacks: Counter = Counter()


def note_fallback(logger: FilteringBoundLogger, event: str, **context: Any) -> None:
    _fallbacks[event] += 1
    logger.debug(event, **context)


def fallback_counts() -> Dict[str, int]:
    return dict(_fallbacks)


def reset_fallbacks() -> None:
    _fallbacks.clear()


def chains_force(graph: Graph, rule: Rule, parts: Sequence[Sequence[int]]) -> bool:
    """True when the rooted parts are the chains/trees of a complete guided run"""
    try:
        run = guided_closure(graph, [p[0] for p in parts], rule, parts)
    except CertificateError:
        return False
    return run.complete


def chains_force_within(
    graph: Graph, vertices: Iterable[int], rule: Rule, parts: Sequence[Sequence[int]]
) -> bool:
    """``chains_force`` on the subgraph induced by ``vertices``"""
    sub, relabel = induced_subgraph(graph, vertices)
    return chains_force(sub, rule, [[relabel[v] for v in part] for part in parts])


def finish(
    graph: Graph,
    family: Family,
    rule: Rule,
    parts: Sequence[Sequence[int]],
    equalities: List[str],
) -> FamilySolution:
    """Build the cover from root-first parts and verify it by replay"""
    kind = CoverKind.PATH_COVER if rule is Rule.STANDARD else CoverKind.TREE_COVER
    try:
        cover = make_cover(graph, kind, parts, roots=[p[0] for p in parts])
    except CertificateError as e:
        raise FamilyConstructionError(f"{family.value}: {e}") from e
    forcing_set = tuple(sorted(part[0] for part in cover.parts))
    run = guided_closure(graph, forcing_set, rule, cover.parts)
    if not run.complete:
        raise FamilyConstructionError(
            f"{family.value}: guided replay stalls at {len(run.derived)} of {graph.n} vertices"
        )
    if not extract_cover(run).same_parts(cover):
        raise FamilyConstructionError(f"{family.value}: replayed parts differ from the cover")
    if not is_forcing_set(graph, forcing_set, rule):
        raise FamilyConstructionError(f"{family.value}: {list(forcing_set)} is not a forcing set")
    return FamilySolution(
        family=family,
        graph=graph,
        forcing_set=forcing_set,
        cover=cover,
        rule=rule,
        claimed_equalities=equalities,
        run=run,
    )
