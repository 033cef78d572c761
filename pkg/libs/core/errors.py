"""
Exception hierarchy shared by every library module
"""


class ForcingLabError(Exception):
    """Base exception for forcing-lab errors"""
    pass


class GraphFormatError(ForcingLabError, ValueError):
    """Malformed graph6 or edge-list input"""
    pass


class VertexRangeError(ForcingLabError, ValueError):
    """Vertex out of range or self-loop"""
    pass


class IncompleteRunError(ForcingLabError):
    """Cover requested from a run whose derived set is not the whole graph"""
    pass


class SearchBudgetExceeded(ForcingLabError):
    """Exact search ran out of its node budget"""

    def __init__(self, what: str, nodes: int, limit: int):
        super().__init__(f"{what}: node budget exhausted ({nodes} > {limit})")
        self.what = what
        self.nodes = nodes
        self.limit = limit


class RecognitionError(ForcingLabError):
    """Structural precondition of a recognizer violated"""
    pass


class CertificateError(ForcingLabError):
    """Certificate or cover does not satisfy its invariants"""
    pass


class FamilyConstructionError(ForcingLabError):
    """A constructive step failed its replay verification"""
    pass


class UnknownSuiteError(ForcingLabError):
    """Verification suite name not registered"""
    pass


class ParameterRangeError(ForcingLabError, ValueError):
    """Generator or construction argument outside its valid range"""
    pass
