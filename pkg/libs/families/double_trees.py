"""
Positive forcing pairs of a double tree.

The edges between the two trees end on one path of each tree (a third branch
would give a K_{2,3} minor). Those two paths form a double path and the rest
of each tree hangs off it, so a pair for the double path serves the whole
graph: the same-side ends of the two paths, or a pair that cuts the double
path into a left and a right side.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from ..core.errors import CertificateError, FamilyConstructionError
from ..core.logging import get_logger
from ..forcing.covers import is_induced_tree, path_order, tree_order
from ..forcing.models import Rule
from ..graphs.bits import component_masks, mask_of, members, popcount
from ..graphs.graph import Graph
from ..structure.outerplanar import outerplanar_embedding
from .base import chains_force, finish, note_fallback
from .double_paths import orient_parallel
from .models import Family, FamilySolution

logger = get_logger(__name__)


def check_double_tree(graph: Graph, t1: Iterable[int], t2: Iterable[int]) -> Tuple[int, int]:
    """Masks of the two trees; CertificateError unless they cover a double tree"""
    m1, m2 = mask_of(t1), mask_of(t2)
    adjacency = graph.adjacency
    if not graph.is_connected() or graph.n < 3:
        raise CertificateError("a double tree is connected with at least three vertices")
    if is_induced_tree(adjacency, graph.full_mask):
        raise CertificateError("graph is a tree")
    if m1 & m2 or m1 | m2 != graph.full_mask:
        raise CertificateError("the two trees do not partition the vertices")
    if not (is_induced_tree(adjacency, m1) and is_induced_tree(adjacency, m2)):
        raise CertificateError("a part is not an induced tree")
    if outerplanar_embedding(graph) is None:
        raise CertificateError("graph is not outerplanar")
    return m1, m2


def core_path(adjacency: Sequence[int], tree: int, other: int) -> int:
    """Smallest subtree of ``tree`` holding every vertex with a neighbour in ``other``"""
    ends = mask_of(w for w in members(tree) if adjacency[w] & other)
    core = tree
    while True:
        leaves = [w for w in members(core & ~ends) if popcount(adjacency[w] & core) <= 1]
        if not leaves:
            return core
        for w in leaves:
            core &= ~(1 << w)


def _partner(adjacency: Sequence[int], core1: int, core2: int, x: int) -> Optional[int]:
    q1 = list(path_order(adjacency, core1))
    q2 = orient_parallel(adjacency, q1, path_order(adjacency, core2))
    if q2 is None:
        return None
    p = q1.index(x)
    if p == 0:
        return q2[0]
    if p == len(q1) - 1:
        return q2[-1]
    # rungs left of x end no further right than u, so {x, u} separates the sides
    position = {w: j for j, w in enumerate(q2)}
    left: List[int] = [
        position[w] for a in q1[:p] for w in members(adjacency[a]) if w in position
    ]
    return q2[max(left, default=0)]


def double_tree_cut_pair(
    graph: Graph, t1: Iterable[int], t2: Iterable[int], v: int
) -> Tuple[int, FamilySolution]:
    """Vertex u of ``t2`` such that {v, u} forces along ``t1`` and ``t2``"""
    m1, m2 = check_double_tree(graph, t1, t2)
    if not m1 >> v & 1:
        raise CertificateError(f"vertex {v} is not in the first tree")
    adjacency = graph.adjacency
    first = tree_order(adjacency, m1, v)

    core1, core2 = core_path(adjacency, m1, m2), core_path(adjacency, m2, m1)
    x = next(w for w in first if core1 >> w & 1)
    u = _partner(adjacency, core1, core2, x)
    if u is not None:
        parts = [list(first), list(tree_order(adjacency, m2, u))]
        if chains_force(graph, Rule.POSITIVE, parts):
            return u, finish(graph, Family.DOUBLE_TREE, Rule.POSITIVE, parts, ["Z+=T=2"])

    note_fallback(logger, "double_tree_partner_search", v=v, x=x)

    def splits(w: int) -> bool:
        rest = graph.full_mask & ~(1 << w) & ~(1 << v)
        return len(component_masks(adjacency, rest)) > 1

    for w in sorted(members(m2), key=lambda w: (not splits(w), w)):
        parts = [list(first), list(tree_order(adjacency, m2, w))]
        if chains_force(graph, Rule.POSITIVE, parts):
            return w, finish(graph, Family.DOUBLE_TREE, Rule.POSITIVE, parts, ["Z+=T=2"])
    raise FamilyConstructionError(
        f"no vertex of the second tree pairs with {v} ({popcount(m2)} tried)"
    )
