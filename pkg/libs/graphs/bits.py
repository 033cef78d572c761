"""
Bit-set helpers: vertex sets are Python ints with bit v set for vertex v
"""

from typing import Iterable, Iterator, List, Sequence


def mask_of(vertices: Iterable[int]) -> int:
    """Build a mask from vertex labels"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> Iterator[int]:
    """Yield the vertices of a mask in ascending order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    """Smallest vertex of a non-empty mask"""
    return (mask & -mask).bit_length() - 1


def component_masks(adjacency: Sequence[int], within: int) -> List[int]:
    """Connected components of the subgraph induced by ``within``.

    Ordered by smallest member.
    """
    comps = []
    remaining = within
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grown = 0
            for v in members(frontier):
                grown |= adjacency[v]
            frontier = grown & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected_mask(adjacency: Sequence[int], within: int) -> bool:
    if not within:
        return True
    return len(component_masks(adjacency, within)) == 1


def induced_edge_count(adjacency: Sequence[int], within: int) -> int:
    return sum(popcount(adjacency[v] & within) for v in members(within)) // 2
