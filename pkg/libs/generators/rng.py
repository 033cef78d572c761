"""
Portable seeded pseudorandom sequence (xorshift64*).

State update, all arithmetic modulo 2**64:

    x ^= x >> 12
    x ^= x << 25
    x ^= x >> 27
    output = x * 0x2545F4914F6CDD1D

A zero seed is replaced by 0x9E3779B97F4A7C15. ``below(n)`` rejects outputs
at or above the largest multiple of n, then reduces modulo n.
"""

from typing import List, Sequence, TypeVar

from ..core.errors import ParameterRangeError

MASK64 = (1 << 64) - 1
MULTIPLIER = 0x2545F4914F6CDD1D
ZERO_SEED = 0x9E3779B97F4A7C15

T = TypeVar("T")


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = (seed & MASK64) or ZERO_SEED

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * MULTIPLIER) & MASK64

    def below(self, n: int) -> int:
        """Uniform integer in 0..n-1"""
        if n <= 0:
            raise ParameterRangeError(f"below() needs a positive bound, got {n}")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            value = self.next_u64()
            if value < limit:
                return value % n

    def between(self, low: int, high: int) -> int:
        """Uniform integer in low..high inclusive"""
        return low + self.below(high - low + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def chance(self, p: float) -> bool:
        return self.random() < p

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

    def shuffle(self, items: List[T]) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, items: Sequence[T], count: int) -> List[T]:
        pool = list(items)
        self.shuffle(pool)
        return pool[:count]
