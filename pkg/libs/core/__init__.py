"""
Core utilities and shared functionality
"""

from .config import Settings, get_settings
from .errors import (
    CertificateError,
    FamilyConstructionError,
    ForcingLabError,
    GraphFormatError,
    IncompleteRunError,
    ParameterRangeError,
    RecognitionError,
    SearchBudgetExceeded,
    UnknownSuiteError,
    VertexRangeError,
)
from .logging import get_logger, log_search_outcome, setup_logging

__all__ = [
    "Settings",
    "get_settings",
    "setup_logging",
    "get_logger",
    "log_search_outcome",
    "ForcingLabError",
    "GraphFormatError",
    "VertexRangeError",
    "IncompleteRunError",
    "SearchBudgetExceeded",
    "RecognitionError",
    "CertificateError",
    "FamilyConstructionError",
    "UnknownSuiteError",
    "ParameterRangeError",
]
