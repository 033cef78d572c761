"""
Z+ = T for outerplanar graphs: every minimum tree cover is a set of forcing trees.

Roots are assigned by induction on the number of trees. A pendant tree
(adjacent to one other tree only) is peeled, the rest is rooted recursively,
and the pendant root pairs with the first vertex of its neighbour tree that is
adjacent to the pendant tree and turns black. Without a pendant tree, a
consecutive pair is rewritten into a pendant piece and a remainder, rooted as
above, and the roots are carried back to the pair.
"""

from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..core.errors import CertificateError, FamilyConstructionError, RecognitionError
from ..core.logging import get_logger
from ..forcing.covers import is_induced_tree, tree_order, validate_cover
from ..forcing.engine import guided_closure
from ..forcing.models import Cover, CoverKind, Rule
from ..graphs.bits import component_masks, lowest, mask_of, members
from ..graphs.graph import Graph
from ..graphs.operations import induced_subgraph
from ..solvers.covers import tree_cover_number
from ..structure.models import OuterEmbedding
from ..structure.outerplanar import outerplanar_embedding, verify_outer_embedding
from .base import chains_force, finish, note_fallback
from .double_trees import double_tree_cut_pair
from .models import Family, FamilySolution, TreeCoverShape

logger = get_logger(__name__)


def _owners(parts: Sequence[int]) -> Dict[int, int]:
    return {v: i for i, part in enumerate(parts) for v in members(part)}


def _adjacent_trees(graph: Graph, parts: Sequence[int]) -> List[Set[int]]:
    owner = _owners(parts)
    touching: List[Set[int]] = [set() for _ in parts]
    for a, b in graph.edges():
        if owner[a] != owner[b]:
            touching[owner[a]].add(owner[b])
            touching[owner[b]].add(owner[a])
    return touching


def _pendant(graph: Graph, parts: Sequence[int]) -> Optional[Tuple[int, Optional[int]]]:
    if len(parts) == 1:
        return 0, None
    for i, near in enumerate(_adjacent_trees(graph, parts)):
        if len(near) == 1:
            return i, next(iter(near))
    return None


def _consecutive_pairs(
    embedding: OuterEmbedding, parts: Sequence[int]
) -> List[Tuple[int, int]]:
    """Trees joined by an outer edge, each with exactly two outer edges leaving it"""
    owner = _owners(parts)
    leaving = [0] * len(parts)
    joined = set()
    for a, b in embedding.outer_edges:
        i, j = owner[a], owner[b]
        if i != j:
            leaving[i] += 1
            leaving[j] += 1
            joined.add((min(i, j), max(i, j)))
    return sorted((i, j) for i, j in joined if leaving[i] == 2 and leaving[j] == 2)


def _rewrite_pair(
    graph: Graph, embedding: OuterEmbedding, parts: Sequence[int], pair: Tuple[int, int]
) -> Optional[TreeCoverShape]:
    """Replace a consecutive pair by a pendant piece and a remainder.

    Split tree A at u, where {u, v} joins A to B and v is u's only neighbour
    in B. The pendant piece is the one component of A - u next to B; the
    remainder is B together with the rest of A.
    Edges that are inner in G are tried first.
    """
    adjacency = graph.adjacency
    inner = set(embedding.inner_edges)
    for a, b in (pair, (pair[1], pair[0])):
        edges = [
            (u, v)
            for u in members(parts[a])
            for v in members(adjacency[u] & parts[b])
            if adjacency[u] & parts[b] == 1 << v
        ]
        edges.sort(key=lambda e: ((min(e), max(e)) not in inner, e))
        for u, v in edges:
            forest = parts[a] & ~(1 << u)
            near = [
                c for c in component_masks(adjacency, forest)
                if any(adjacency[w] & parts[b] for w in members(c))
            ]
            if len(near) != 1:
                continue
            s1 = near[0]
            s2 = parts[b] | (parts[a] & ~s1)
            if not (is_induced_tree(adjacency, s1) and is_induced_tree(adjacency, s2)):
                continue
            rewritten = list(parts)
            rewritten[a], rewritten[b] = s1, s2
            if len(_adjacent_trees(graph, rewritten)[a]) != 1:
                continue
            return TreeCoverShape(
                consecutive=(a, b),
                transformed=[tuple(members(p)) for p in rewritten],
                pivot=(u, v),
            )
    return None


def _shape(graph: Graph, embedding: OuterEmbedding, parts: Sequence[int]) -> TreeCoverShape:
    pendant = _pendant(graph, parts)
    pairs = _consecutive_pairs(embedding, parts)
    if pendant is not None:
        return TreeCoverShape(
            pendant=pendant[0],
            pendant_neighbour=pendant[1],
            consecutive=pairs[0] if pairs else None,
        )
    for pair in pairs:
        rewritten = _rewrite_pair(graph, embedding, parts, pair)
        if rewritten is not None:
            return rewritten
    raise CertificateError("tree cover has neither a pendant tree nor a consecutive pair")


def consecutive_or_pendant_trees(
    graph: Graph, embedding: OuterEmbedding, cover: Cover, check_minimum: bool = True
) -> TreeCoverShape:
    """Pendant tree of a minimum tree cover, or a consecutive pair with its rewrite"""
    if cover.kind is not CoverKind.TREE_COVER:
        raise CertificateError("expected a tree cover")
    validate_cover(graph, cover)
    if check_minimum and tree_cover_number(graph).value != cover.size:
        raise CertificateError("tree cover is not minimum")
    return _shape(graph, embedding, [mask_of(p) for p in cover.parts])


def _rooted(graph: Graph, parts: Sequence[int], roots: Sequence[int]) -> List[List[int]]:
    return [list(tree_order(graph.adjacency, p, r)) for p, r in zip(parts, roots)]


def _works(graph: Graph, parts: Sequence[int], roots: Sequence[int]) -> bool:
    return chains_force(graph, Rule.POSITIVE, _rooted(graph, parts, roots))


def _peel(graph: Graph, parts: List[int], pendant: int, neighbour: int) -> List[int]:
    rest = graph.full_mask & ~parts[pendant]
    sub, relabel = induced_subgraph(graph, members(rest))
    back = {new: old for old, new in relabel.items()}
    others = [i for i in range(len(parts)) if i != pendant]
    sub_parts = [mask_of(relabel[v] for v in members(parts[i])) for i in others]
    sub_roots = _assign_roots(sub, sub_parts)

    roots = [0] * len(parts)
    for i, r in zip(others, sub_roots):
        roots[i] = back[r]

    run = guided_closure(sub, sub_roots, Rule.POSITIVE, _rooted(sub, sub_parts, sub_roots))
    timeline = list(run.initial_black) + [f.forced for f in run.forces]
    boundary = {
        v for v in members(parts[neighbour]) if graph.adjacency[v] & parts[pendant]
    }
    x = next(back[w] for w in timeline if back[w] in boundary)

    pair, pair_relabel = induced_subgraph(graph, members(parts[neighbour] | parts[pendant]))
    pair_back = {new: old for old, new in pair_relabel.items()}
    try:
        y, _ = double_tree_cut_pair(
            pair,
            [pair_relabel[v] for v in members(parts[neighbour])],
            [pair_relabel[v] for v in members(parts[pendant])],
            pair_relabel[x],
        )
        roots[pendant] = pair_back[y]
        if _works(graph, parts, roots):
            return roots
    except (CertificateError, FamilyConstructionError) as e:
        logger.debug("cut_pair_failed", x=x, error=str(e))

    for y in members(parts[pendant]):
        roots[pendant] = y
        if _works(graph, parts, roots):
            note_fallback(logger, "pendant_root_research", x=x, y=y)
            return roots
    raise FamilyConstructionError(f"no root of the pendant tree completes the forcing from x={x}")


def _assign_roots(graph: Graph, parts: List[int]) -> List[int]:
    """One root per part so the parts are the positive forcing trees"""
    comps = component_masks(graph.adjacency, graph.full_mask)
    if len(comps) > 1:
        roots = [0] * len(parts)
        for comp in comps:
            inside = [i for i, p in enumerate(parts) if p & comp]
            sub, relabel = induced_subgraph(graph, members(comp))
            back = {new: old for old, new in relabel.items()}
            sub_roots = _assign_roots(
                sub, [mask_of(relabel[v] for v in members(parts[i])) for i in inside]
            )
            for i, r in zip(inside, sub_roots):
                roots[i] = back[r]
        return roots
    if len(parts) == 1:
        return [lowest(parts[0])]

    embedding = outerplanar_embedding(graph)
    if embedding is None:
        raise RecognitionError("graph is not outerplanar")
    shape = _shape(graph, embedding, parts)
    if shape.pendant is not None and shape.pendant_neighbour is not None:
        return _peel(graph, parts, shape.pendant, shape.pendant_neighbour)

    assert shape.consecutive is not None and shape.transformed is not None
    assert shape.pivot is not None
    a, b = shape.consecutive
    _, v = shape.pivot
    rewritten = [mask_of(p) for p in shape.transformed]
    new_roots = _peel(graph, rewritten, a, b)
    y, x = new_roots[a], new_roots[b]
    roots = list(new_roots)
    roots[a] = y
    # x outside tree b lies in the rest of tree a: swap it for v
    roots[b] = x if parts[b] >> x & 1 else v
    if _works(graph, parts, roots):
        return roots
    for ra in members(parts[a]):
        for rb in members(parts[b]):
            roots[a], roots[b] = ra, rb
            if _works(graph, parts, roots):
                note_fallback(logger, "consecutive_root_research", a=a, b=b)
                return roots
    raise FamilyConstructionError("consecutive pair roots could not be carried back")


def outerplanar_solution(
    graph: Graph, embedding: Optional[OuterEmbedding] = None, cover: Optional[Cover] = None
) -> FamilySolution:
    """Positive forcing set whose forcing trees are a minimum tree cover's trees"""
    if not graph.is_connected():
        raise RecognitionError("outerplanar construction needs a connected graph")
    if embedding is None:
        embedding = outerplanar_embedding(graph)
        if embedding is None:
            raise RecognitionError("graph is not outerplanar")
    else:
        verify_outer_embedding(graph, embedding)
    if cover is None:
        cover = tree_cover_number(graph).cover
    elif cover.kind is not CoverKind.TREE_COVER:
        raise CertificateError("expected a tree cover")
    else:
        validate_cover(graph, cover)

    parts = [mask_of(p) for p in cover.parts]
    roots = _assign_roots(graph, parts)
    solution = finish(graph, Family.OUTERPLANAR, Rule.POSITIVE, _rooted(graph, parts, roots), ["Z+=T"])
    logger.debug("outerplanar_solved", n=graph.n, value=solution.value)
    return solution


def tree_solution(graph: Graph) -> FamilySolution:
    """Any single vertex of a tree is a positive forcing set"""
    if not is_induced_tree(graph.adjacency, graph.full_mask):
        raise RecognitionError("graph is not a tree")
    return finish(
        graph, Family.TREE, Rule.POSITIVE, [list(tree_order(graph.adjacency, graph.full_mask))], ["Z+=T=1"]
    )
