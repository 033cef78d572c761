"""
Cover shape checks and construction helpers
"""

from typing import Iterable, List, Optional, Sequence

from ..core.errors import CertificateError
from ..graphs.bits import induced_edge_count, is_connected_mask, lowest, mask_of, members, popcount
from ..graphs.graph import Graph, VertexSet
from .models import Cover, CoverKind


def is_induced_tree(adjacency: Sequence[int], mask: int) -> bool:
    if not mask:
        return False
    return (
        is_connected_mask(adjacency, mask)
        and induced_edge_count(adjacency, mask) == popcount(mask) - 1
    )


def is_induced_path(adjacency: Sequence[int], mask: int) -> bool:
    if not is_induced_tree(adjacency, mask):
        return False
    return all(popcount(adjacency[v] & mask) <= 2 for v in members(mask))


def is_clique(adjacency: Sequence[int], mask: int) -> bool:
    return all(mask & ~(1 << v) & ~adjacency[v] == 0 for v in members(mask))


def path_order(adjacency: Sequence[int], mask: int, start: Optional[int] = None) -> VertexSet:
    """Vertices of an induced path from ``start`` (default: smaller endpoint)"""
    ends = [v for v in members(mask) if popcount(adjacency[v] & mask) <= 1]
    if start is None:
        start = min(ends)
    elif start not in ends:
        raise CertificateError(f"vertex {start} is not an endpoint of its path")
    order = [start]
    seen = 1 << start
    current = start
    while True:
        step = adjacency[current] & mask & ~seen
        if not step:
            break
        current = lowest(step)
        seen |= 1 << current
        order.append(current)
    return tuple(order)


def tree_order(adjacency: Sequence[int], mask: int, root: Optional[int] = None) -> VertexSet:
    """Breadth-first order of an induced tree from ``root`` (default: smallest)"""
    root = lowest(mask) if root is None else root
    order = [root]
    seen = 1 << root
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for w in members(adjacency[v] & mask & ~seen):
                seen |= 1 << w
                order.append(w)
                nxt.append(w)
        frontier = nxt
    return tuple(order)


def tree_parents(adjacency: Sequence[int], part: VertexSet) -> dict:
    """Parent of every non-root vertex when ``part`` is rooted at ``part[0]``"""
    mask = mask_of(part)
    parent = {}
    seen = 1 << part[0]
    frontier = [part[0]]
    while frontier:
        nxt = []
        for v in frontier:
            for w in members(adjacency[v] & mask & ~seen):
                seen |= 1 << w
                parent[w] = v
                nxt.append(w)
        frontier = nxt
    return parent


def make_cover(
    graph: Graph, kind: CoverKind, parts: Iterable[Iterable[int]], roots: Optional[Iterable[int]] = None
) -> Cover:
    """Normalise parts into root-first order and build the Cover.

    Roots default to the smaller path endpoint or the smallest tree vertex.
    """
    root_set = set(roots or ())
    normalised: List[VertexSet] = []
    for part in parts:
        items = tuple(part)
        if kind is CoverKind.CLIQUE_EDGE_COVER:
            normalised.append(tuple(sorted(items)))
            continue
        mask = mask_of(items)
        chosen = [v for v in items if v in root_set]
        root = chosen[0] if chosen else None
        if kind is CoverKind.PATH_COVER:
            if not is_induced_path(graph.adjacency, mask):
                raise CertificateError(f"part {sorted(items)} does not induce a path")
            normalised.append(path_order(graph.adjacency, mask, root))
        else:
            if not is_induced_tree(graph.adjacency, mask):
                raise CertificateError(f"part {sorted(items)} does not induce a tree")
            normalised.append(tree_order(graph.adjacency, mask, root))
    return Cover(graph=graph, kind=kind, parts=normalised)


def validate_cover(graph: Graph, cover: Cover) -> None:
    """Raise CertificateError unless ``cover`` satisfies its kind's invariants"""
    adjacency = graph.adjacency
    if cover.kind is CoverKind.CLIQUE_EDGE_COVER:
        covered = set()
        for part in cover.parts:
            graph.check_vertices(part)
            mask = mask_of(part)
            if not is_clique(adjacency, mask):
                raise CertificateError(f"part {list(part)} is not a clique")
            covered.update((u, v) for u in part for v in part if u < v)
        missing = [e for e in graph.edges() if e not in covered]
        if missing:
            raise CertificateError(f"edges {missing[:3]} not covered by any clique")
        return

    seen = 0
    for part in cover.parts:
        if not part:
            raise CertificateError("empty part")
        graph.check_vertices(part)
        mask = mask_of(part)
        if popcount(mask) != len(part):
            raise CertificateError(f"part {list(part)} repeats a vertex")
        if seen & mask:
            raise CertificateError(f"part {list(part)} overlaps an earlier part")
        seen |= mask
        if cover.kind is CoverKind.PATH_COVER:
            if not is_induced_path(adjacency, mask):
                raise CertificateError(f"part {list(part)} does not induce a path")
            ends = [v for v in part if popcount(adjacency[v] & mask) <= 1]
            if part[0] not in ends:
                raise CertificateError(f"path part {list(part)} is not rooted at an endpoint")
        elif not is_induced_tree(adjacency, mask):
            raise CertificateError(f"part {list(part)} does not induce a tree")
    if seen != graph.full_mask:
        raise CertificateError(
            f"vertices {list(members(graph.full_mask & ~seen))} are not covered"
        )


def reverse_chains(cover: Cover) -> Cover:
    """Path cover with every chain read from its other end"""
    if cover.kind is not CoverKind.PATH_COVER:
        raise CertificateError("only path covers have chains to reverse")
    return cover.model_copy(update={"parts": [tuple(reversed(p)) for p in cover.parts]})
