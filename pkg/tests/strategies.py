"""
Hypothesis strategies for small simple graphs
"""

from itertools import combinations

from hypothesis import strategies as st
from hypothesis.strategies import DrawFn, composite

from libs.graphs import Graph, from_edge_list


@composite
def graphs(draw: DrawFn, min_n: int = 1, max_n: int = 7, connected: bool = False) -> Graph:
    """Random simple graph; ``connected`` adds a random spanning tree first"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs)) if pairs else st.just(set()))
    edges = set(chosen)
    if connected:
        for v in range(1, n):
            u = draw(st.integers(min_value=0, max_value=v - 1))
            edges.add((u, v))
    return from_edge_list(n, sorted(edges))
