"""
Result records and the node budget shared by the exact searches
"""

from enum import Enum
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, Field

from ..core.config import get_settings
from ..core.errors import SearchBudgetExceeded
from ..forcing.models import Cover
from ..graphs.graph import VertexSet


class Parameter(str, Enum):
    Z = "Z"
    Z_PLUS = "Z+"
    P = "P"
    T = "T"
    CC = "cc"


class SearchStats(BaseModel):
    """Optimality evidence of one exact search"""
    nodes: int = 0
    lower_bound: int = 0
    components: int = 0


class ParameterResult(BaseModel):
    """Optimal value with a feasible certificate of that size"""
    parameter: Parameter
    value: int = Field(..., ge=0)
    certificate: Union[VertexSet, Cover]
    stats: SearchStats = Field(default_factory=SearchStats)

    @property
    def forcing_set(self) -> VertexSet:
        if isinstance(self.certificate, Cover):
            raise TypeError(f"{self.parameter.value} certificate is a cover")
        return self.certificate

    @property
    def cover(self) -> Cover:
        if not isinstance(self.certificate, Cover):
            raise TypeError(f"{self.parameter.value} certificate is a vertex set")
        return self.certificate

    def to_record(self) -> Dict[str, Any]:
        if isinstance(self.certificate, Cover):
            certificate: Any = self.certificate.to_record()
        else:
            certificate = list(self.certificate)
        return {
            "parameter": self.parameter.value,
            "value": self.value,
            "certificate": certificate,
            "stats": self.stats.model_dump(),
        }


class NodeBudget:
    """Counts search nodes and stops the search past the limit"""

    def __init__(self, what: str, limit: Optional[int] = None):
        self.what = what
        self.limit = limit if limit is not None else get_settings().search_node_limit
        self.nodes = 0

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.nodes > self.limit:
            raise SearchBudgetExceeded(self.what, self.nodes, self.limit)
