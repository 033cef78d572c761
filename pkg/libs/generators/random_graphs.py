"""
Seeded random members of the graph families under study.

Every generator is a pure function of its arguments; the sequence comes from
``XorShift64Star`` so the same seed gives the same graph everywhere.
"""

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from ..core.errors import ParameterRangeError
from ..graphs.graph import Graph, from_edge_list
from .rng import XorShift64Star

Edge = Tuple[int, int]


def _cycle_edges(vertices: Sequence[int]) -> List[Edge]:
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


def random_tree(n: int, seed: int) -> Graph:
    """Random recursive tree: vertex i attaches to a uniform earlier vertex"""
    if n < 1:
        raise ParameterRangeError("tree needs n >= 1")
    rng = XorShift64Star(seed)
    return from_edge_list(n, [(i, rng.below(i)) for i in range(1, n)])


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) with pairs visited in lexicographic order"""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ParameterRangeError(f"invalid G(n, p) parameters n={n} p={p}")
    rng = XorShift64Star(seed)
    return from_edge_list(n, [(u, v) for u, v in combinations(range(n), 2) if rng.chance(p)])


def random_block_cycle(blocks: int, max_cycle: int, seed: int) -> Graph:
    """Vertex sums of edges and cycles glued at uniformly chosen existing vertices.

    Each block is an edge or a cycle of length 3..max_cycle, chosen uniformly
    among the max_cycle - 1 options.
    """
    if blocks < 1:
        raise ParameterRangeError("need at least one block")
    if max_cycle < 2:
        raise ParameterRangeError("max_cycle must be at least 2 (edges only)")
    rng = XorShift64Star(seed)
    edges: List[Edge] = []
    n = 0
    for index in range(blocks):
        size = rng.between(2, max_cycle)
        if index == 0:
            anchor = 0
            n = 1
        else:
            anchor = rng.below(n)
        ring = [anchor] + list(range(n, n + size - 1))
        n += size - 1
        edges.extend(_cycle_edges(ring) if size >= 3 else [(ring[0], ring[1])])
    return from_edge_list(n, edges)


def random_unicyclic(n: int, cycle_length: int, seed: int) -> Graph:
    """The cycle 0..c-1 with a random forest hung on it"""
    if not 3 <= cycle_length <= n:
        raise ParameterRangeError(f"cycle length {cycle_length} must lie in 3..{n}")
    rng = XorShift64Star(seed)
    edges = _cycle_edges(list(range(cycle_length)))
    edges.extend((v, rng.below(v)) for v in range(cycle_length, n))
    return from_edge_list(n, edges)


def _triangulate(polygon: List[int], rng: XorShift64Star, chords: List[Edge]) -> None:
    # fan the edge (first, last) to a random apex, then recurse on both sides
    stack = [polygon]
    while stack:
        poly = stack.pop()
        if len(poly) <= 3:
            continue
        apex = rng.between(1, len(poly) - 2)
        if apex > 1:
            chords.append((poly[0], poly[apex]))
        if apex < len(poly) - 2:
            chords.append((poly[apex], poly[-1]))
        stack.append(poly[: apex + 1])
        stack.append(poly[apex:])


def random_outerplanar(
    n: int, inner_keep: float, seed: int, outer_drop: float = 0.0
) -> Graph:
    """Random triangulated polygon, inner chords kept independently.

    With ``outer_drop`` > 0 outer cycle edges are also removed at random as
    long as the graph stays connected.
    """
    if n < 3:
        raise ParameterRangeError("outerplanar generator needs n >= 3")
    if not 0.0 <= inner_keep <= 1.0 or not 0.0 <= outer_drop <= 1.0:
        raise ParameterRangeError("probabilities must lie in [0, 1]")
    rng = XorShift64Star(seed)
    chords: List[Edge] = []
    _triangulate(list(range(n)), rng, chords)
    kept = [c for c in chords if rng.chance(inner_keep)]
    outer = _cycle_edges(list(range(n)))
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(outer + kept)
    for u, v in outer:
        if outer_drop and rng.chance(outer_drop):
            g.remove_edge(u, v)
            if not nx.is_connected(g):
                g.add_edge(u, v)
    return from_edge_list(n, list(g.edges()))


def random_k_tree(n: int, k: int, cluster_only: bool, seed: int) -> Graph:
    """K_{k+1} on 0..k, then each new vertex joins a uniformly chosen k-clique.

    With ``cluster_only`` the k-clique is always a k-subset of the base.
    """
    if k < 1 or n < k + 1:
        raise ParameterRangeError(f"a {k}-tree needs n >= {k + 1}")
    rng = XorShift64Star(seed)
    base = list(range(k + 1))
    edges: List[Edge] = list(combinations(base, 2))
    cliques: List[Tuple[int, ...]] = list(combinations(base, k))
    for v in range(k + 1, n):
        chosen = rng.choice(cliques)
        edges.extend((u, v) for u in chosen)
        if not cluster_only:
            cliques.extend(tuple(sorted(sub + (v,))) for sub in combinations(chosen, k - 1))
    return from_edge_list(n, edges)


def random_k_cluster(k: int, attachments: int, extra: int, seed: int) -> Graph:
    """k-cluster on base 0..k whose attachments use exactly ``attachments`` k-subsets.

    The first ``attachments`` extra vertices each take a distinct subset; the
    rest pick uniformly among those subsets.
    """
    if k < 1 or not 0 <= attachments <= k + 1:
        raise ParameterRangeError(f"attachments must lie in 0..{k + 1}")
    if extra < attachments or (attachments == 0 and extra):
        raise ParameterRangeError("need one extra vertex per attachment subset")
    rng = XorShift64Star(seed)
    base = list(range(k + 1))
    subsets = rng.sample(list(combinations(base, k)), attachments)
    edges: List[Edge] = list(combinations(base, 2))
    for i in range(extra):
        v = k + 1 + i
        chosen = subsets[i] if i < attachments else rng.choice(subsets)
        edges.extend((u, v) for u in chosen)
    return from_edge_list(k + 1 + extra, edges)


def random_chordal(n: int, k: int, deletions: int, seed: int) -> Graph:
    """Random k-tree thinned by up to ``deletions`` chordality-preserving edge removals.

    An edge is removable when it lies in exactly one maximal clique and its
    removal leaves the graph connected.
    """
    rng = XorShift64Star(seed)
    g = random_k_tree(n, k, False, rng.next_u64()).to_networkx()
    for _ in range(deletions):
        cliques = list(nx.find_cliques(g))
        counts: Dict[Edge, int] = {}
        for clique in cliques:
            for u, v in combinations(sorted(clique), 2):
                counts[(u, v)] = counts.get((u, v), 0) + 1
        candidates = sorted(e for e, c in counts.items() if c == 1)
        rng.shuffle(candidates)
        for u, v in candidates:
            g.remove_edge(u, v)
            if nx.is_connected(g):
                break
            g.add_edge(u, v)
        else:
            break
    return from_edge_list(n, list(g.edges()))


def _staircase(a: int, b: int, rng: XorShift64Star, aligned: bool) -> List[Edge]:
    """Non-crossing rungs from (0, 0) to (a-1, b-1) along a monotone sweep"""
    p = q = 0
    rungs = [(0, 0)]
    while (p, q) != (a - 1, b - 1):
        if aligned and p < a - 1 and q < b - 1:
            p, q = p + 1, q + 1
        elif p == a - 1:
            q += 1
        elif q == b - 1:
            p += 1
        else:
            step = rng.below(3)
            p, q = p + (step != 1), q + (step != 0)
        if aligned or (p, q) == (a - 1, b - 1) or rng.chance(0.5):
            rungs.append((p, q))
    return rungs


def random_series_parallel_paths(
    k: int, lengths: Sequence[int], seed: int, aligned: bool = False
) -> Graph:
    """Paths P_1..P_k on consecutive labels; consecutive paths joined by staircase rungs.

    ``aligned`` with equal lengths gives the k x n grid.
    """
    if k < 2 or len(lengths) != k or any(length < 1 for length in lengths):
        raise ParameterRangeError("need k >= 2 paths with positive lengths")
    for a, b in zip(lengths, lengths[1:]):
        if a == 1 and b == 1:
            raise ParameterRangeError(
                "two consecutive single-vertex paths form a path, not a double path"
            )
    rng = XorShift64Star(seed)
    starts = [0]
    for length in lengths:
        starts.append(starts[-1] + length)
    edges: List[Edge] = []
    for i, length in enumerate(lengths):
        edges.extend((starts[i] + j, starts[i] + j + 1) for j in range(length - 1))
    for i in range(k - 1):
        for p, q in _staircase(lengths[i], lengths[i + 1], rng, aligned):
            edges.append((starts[i] + p, starts[i + 1] + q))
    return from_edge_list(starts[-1], edges)
