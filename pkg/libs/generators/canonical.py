"""
Named graphs with fixed labellings
"""

import networkx as nx

from ..core.errors import ParameterRangeError
from ..graphs.graph import Graph, from_edge_list


def _grid(m: int, n: int) -> Graph:
    g = nx.grid_2d_graph(m, n)
    index = {(i, j): i * n + j for i in range(m) for j in range(n)}
    return from_edge_list(m * n, [(index[a], index[b]) for a, b in g.edges()])


def canonical(family: str, *params: int) -> Graph:
    """P_n, C_n, K_n, K_{m,n}, the m x n grid (row-major), K_{1,n} or the fan P_n + apex"""
    if family == "path":
        (n,) = params
        if n < 1:
            raise ParameterRangeError("path needs n >= 1")
        return Graph.from_networkx(nx.path_graph(n))
    if family == "cycle":
        (n,) = params
        if n < 3:
            raise ParameterRangeError("cycle needs n >= 3")
        return Graph.from_networkx(nx.cycle_graph(n))
    if family == "complete":
        (n,) = params
        if n < 1:
            raise ParameterRangeError("complete graph needs n >= 1")
        return Graph.from_networkx(nx.complete_graph(n))
    if family == "complete_bipartite":
        m, n = params
        if m < 1 or n < 1:
            raise ParameterRangeError("complete bipartite graph needs both sides non-empty")
        return Graph.from_networkx(nx.complete_bipartite_graph(m, n))
    if family == "grid":
        m, n = params
        if m < 1 or n < 1:
            raise ParameterRangeError("grid needs m, n >= 1")
        return _grid(m, n)
    if family == "star":
        (n,) = params
        if n < 1:
            raise ParameterRangeError("star needs at least one leaf")
        return Graph.from_networkx(nx.star_graph(n))
    if family == "fan":
        (n,) = params
        if n < 2:
            raise ParameterRangeError("fan needs a path of at least two vertices")
        pairs = [(0, i) for i in range(1, n + 1)] + [(i, i + 1) for i in range(1, n)]
        return from_edge_list(n + 1, pairs)
    raise ParameterRangeError(f"unknown canonical family {family!r}")
