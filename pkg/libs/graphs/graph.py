"""
Immutable simple undirected graph on vertices 0..n-1
"""

from typing import Iterable, List, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.errors import VertexRangeError
from .bits import component_masks, members, popcount

# Sorted tuple of vertex labels; the public face of a bit mask
VertexSet = Tuple[int, ...]


class Graph(BaseModel):
    """Simple graph stored as one adjacency bit mask per vertex"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    adjacency: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_simple(self) -> "Graph":
        if len(self.adjacency) != self.n:
            raise VertexRangeError(
                f"adjacency has {len(self.adjacency)} rows for n={self.n}"
            )
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adjacency):
            if row & ~full:
                raise VertexRangeError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise VertexRangeError(f"self-loop at vertex {v}")
            for u in members(row):
                if not self.adjacency[u] >> v & 1:
                    raise VertexRangeError(f"edge {{{v},{u}}} is not symmetric")
        return self

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbours(self, v: int) -> List[int]:
        self.check_vertex(v)
        return list(members(self.adjacency[v]))

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return popcount(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted"""
        return [
            (u, v)
            for u in range(self.n)
            for v in members(self.adjacency[u] >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adjacency) // 2

    def min_degree(self) -> int:
        return min((popcount(row) for row in self.adjacency), default=0)

    def is_connected(self) -> bool:
        return self.n == 0 or len(component_masks(self.adjacency, self.full_mask)) == 1

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} out of range 0..{self.n - 1}")

    def check_vertices(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            self.check_vertex(v)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Relabel nodes 0..n-1 in the graph's node order"""
        index = {node: i for i, node in enumerate(g.nodes())}
        return from_edge_list(len(index), [(index[a], index[b]) for a, b in g.edges()])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build the simple graph with the given edges.

    Duplicates and both orientations collapse; self-loops are rejected.
    """
    if n < 0:
        raise VertexRangeError(f"negative vertex count {n}")
    rows = [0] * n
    for pair in pairs:
        if len(pair) != 2:
            raise VertexRangeError(f"edge {tuple(pair)} does not have two endpoints")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise VertexRangeError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n=n, adjacency=tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n=n, adjacency=(0,) * n)
