"""
Graphs with P = 2 and any forcing number in the interval
"""

from ..core.errors import ParameterRangeError
from ..graphs.graph import Graph, from_edge_list


def p2_interval_witness(m: int, n: int, k: int) -> Graph:
    """Paths P_1 = 0..m-1 and P_2 = m..m+n-1; the first k vertices of P_1 see all of P_2"""
    if not 1 <= k <= min(m, n):
        raise ParameterRangeError(f"k must lie in 1..{min(m, n)}, got {k}")
    pairs = [(i, i + 1) for i in range(m - 1)]
    pairs += [(m + j, m + j + 1) for j in range(n - 1)]
    pairs += [(i, m + j) for i in range(k) for j in range(n)]
    return from_edge_list(m + n, pairs)
