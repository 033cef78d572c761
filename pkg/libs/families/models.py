"""
Pydantic models for constructive family solutions
"""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from ..forcing.models import Cover, ForcingRun, Rule
from ..graphs.graph import Graph, VertexSet


class Family(str, Enum):
    BLOCK_CYCLE = "block_cycle"
    UNICYCLIC = "unicyclic"
    DOUBLE_PATH = "double_path"
    SERIES_OF_PARALLEL_PATHS = "series_of_parallel_paths"
    DOUBLE_TREE = "double_tree"
    OUTERPLANAR = "outerplanar"
    TREE = "tree"
    VERTEX_SUM = "vertex_sum"


class FamilySolution(BaseModel):
    """Forcing set whose forcing chains/trees are exactly ``cover``'s parts"""
    family: Family
    graph: Graph
    forcing_set: VertexSet
    cover: Cover
    rule: Rule
    claimed_equalities: List[str] = Field(default_factory=list)
    # Guided run exhibiting the cover as chains/trees
    run: ForcingRun

    @property
    def value(self) -> int:
        return len(self.forcing_set)

    def to_record(self) -> Dict[str, Any]:
        return {
            "family": self.family.value,
            "rule": self.rule.value,
            "value": self.value,
            "forcing_set": list(self.forcing_set),
            "cover": self.cover.to_record(),
            "claimed_equalities": self.claimed_equalities,
            "transcript": self.run.to_record(),
        }


class TreeCoverShape(BaseModel):
    """Pendant tree or consecutive pair of a minimum tree cover"""
    pendant: Optional[int] = None
    # The only tree adjacent to the pendant one (None when the cover has one tree)
    pendant_neighbour: Optional[int] = None
    consecutive: Optional[Tuple[int, int]] = None
    # Cover with the consecutive pair replaced by a pendant piece and a remainder
    transformed: Optional[List[VertexSet]] = None
    # Edge {u, v} used by the transformation, u on the side that was split
    pivot: Optional[Tuple[int, int]] = None


class KClusterParameters(BaseModel):
    k: int
    s_size: int
    z_plus: int
    t: int
