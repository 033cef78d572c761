"""
Pydantic models for forcing runs and covers
"""

from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional

from pydantic import BaseModel, Field

from ..graphs.graph import Graph, VertexSet


class Rule(str, Enum):
    STANDARD = "standard"
    POSITIVE = "positive"


class CoverKind(str, Enum):
    PATH_COVER = "path_cover"
    TREE_COVER = "tree_cover"
    CLIQUE_EDGE_COVER = "clique_edge_cover"


class Force(BaseModel):
    """One colour change: ``forcer`` turns ``forced`` black in ``round``"""
    forcer: int
    forced: int
    round: int = Field(..., ge=0)
    # White component used under the positive rule
    component_witness: Optional[VertexSet] = None


class ForcingRun(BaseModel):
    """Chronological record of a closure"""
    graph: Graph
    initial_black: VertexSet
    rule: Rule
    forces: List[Force] = Field(default_factory=list)
    derived: VertexSet

    @property
    def complete(self) -> bool:
        return len(self.derived) == self.graph.n

    @property
    def rounds(self) -> int:
        return self.forces[-1].round + 1 if self.forces else 0

    def to_record(self) -> Dict[str, Any]:
        return {
            "rule": self.rule.value,
            "initial_black": list(self.initial_black),
            "forces": [[f.forcer, f.forced, f.round] for f in self.forces],
            "derived": list(self.derived),
        }


class Cover(BaseModel):
    """Vertex partition into induced paths/trees, or an edge cover by cliques.

    Path and tree parts are ordered with their root first; path parts follow
    the path.
    """
    graph: Graph
    kind: CoverKind
    parts: List[VertexSet]
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.parts)

    @property
    def roots(self) -> VertexSet:
        return tuple(sorted(part[0] for part in self.parts))

    def as_sets(self) -> FrozenSet[FrozenSet[int]]:
        return frozenset(frozenset(part) for part in self.parts)

    def same_parts(self, other: "Cover") -> bool:
        """Equal as collections of vertex sets"""
        return self.as_sets() == other.as_sets()

    def to_record(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "parts": [list(part) for part in self.parts]}
