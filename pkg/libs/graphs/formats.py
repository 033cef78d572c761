"""
Graph ingestion and emission: graph6, edge-list text and DOT
"""

from typing import Iterable, List, Optional, Sequence

import networkx as nx

from ..core.errors import GraphFormatError
from .graph import Graph, from_edge_list

GRAPH6_MAX_N = 62

# Colour classes for cover parts in DOT output
PART_COLOURS = [
    "red", "blue", "darkgreen", "orange", "purple", "brown",
    "magenta", "cyan4", "gold3", "gray40", "navy", "olivedrab",
]


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 line (n <= 62)"""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise GraphFormatError("empty graph6 string")
    try:
        raw = line.encode("ascii")
    except UnicodeEncodeError as e:
        raise GraphFormatError(f"graph6 text {line!r} is not ASCII") from e
    bad = [c for c in raw if not 63 <= c <= 126]
    if bad:
        raise GraphFormatError(f"graph6 byte {bad[0]!r} outside range 63..126")
    if raw[0] == 126:
        raise GraphFormatError("long-form graph6 header (n > 62) is not supported")
    try:
        g = nx.from_graph6_bytes(raw)
    except (nx.NetworkXError, ValueError) as e:
        raise GraphFormatError(f"malformed graph6 {line!r}: {e}") from e
    return from_edge_list(g.number_of_nodes(), g.edges())


def to_graph6(graph: Graph) -> str:
    """Encode as canonical short-form graph6 without header or newline"""
    if graph.n > GRAPH6_MAX_N:
        raise GraphFormatError(f"graph6 short form needs n <= {GRAPH6_MAX_N}, got {graph.n}")
    data = nx.to_graph6_bytes(graph.to_networkx(), header=False)
    return data.decode("ascii").strip()


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        n = int(rows[0])
    except ValueError as e:
        raise GraphFormatError(f"first line must be the vertex count, got {rows[0]!r}") from e
    pairs = []
    for line in rows[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"edge line {line!r} must have two endpoints")
        try:
            pairs.append((int(tokens[0]), int(tokens[1])))
        except ValueError as e:
            raise GraphFormatError(f"non-integer endpoint in {line!r}") from e
    return from_edge_list(n, pairs)


def to_edge_list(graph: Graph) -> str:
    lines = [str(graph.n)] + [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    """Auto-detect edge-list text (starts with a digit) or a graph6 line"""
    body = text.strip()
    if not body:
        raise GraphFormatError("empty input")
    if body[0].isdigit():
        return parse_edge_list(body)
    return parse_graph6(body.splitlines()[0])


def read_graphs(lines: Iterable[str]) -> List[Graph]:
    """One graph6 string per line, blank lines skipped"""
    return [parse_graph6(line) for line in lines if line.strip()]


def to_dot(
    graph: Graph,
    black: Optional[Iterable[int]] = None,
    parts: Optional[Sequence[Sequence[int]]] = None,
    name: str = "G",
) -> str:
    """Deterministic DOT text; black vertices filled, cover parts colour-classed"""
    black_set = set(black or ())
    graph.check_vertices(black_set)
    part_of = {}
    for index, part in enumerate(parts or ()):
        for v in part:
            part_of[v] = index

    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in graph.vertices():
        attrs = []
        if v in black_set:
            attrs.append('style=filled, fillcolor=black, fontcolor=white')
        if v in part_of:
            colour = PART_COLOURS[part_of[v] % len(PART_COLOURS)]
            attrs.append(f'color={colour}, penwidth=2, group="p{part_of[v]}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    for u, v in graph.edges():
        if u in part_of and part_of.get(u) == part_of.get(v):
            colour = PART_COLOURS[part_of[u] % len(PART_COLOURS)]
            lines.append(f"  {u} -- {v} [color={colour}, penwidth=2];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
