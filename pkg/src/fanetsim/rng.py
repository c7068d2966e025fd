"""Deterministic pseudo-random source.

Everything random in this package (UAV coordinates, pair selection,
replicate seeding) flows through SplitMix64 so that a given seed yields
bit-identical results on every run and platform.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """SplitMix64 generator: one 64-bit word of state, published reference outputs.

    The uniform mapping keeps the top 53 bits, so the doubles it produces
    are identical on any IEEE-754 platform.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError("seed must be a non-negative integer")
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def next_uniform(self) -> float:
        """Uniform double in [0, 1) with 53-bit precision."""
        return (self.next_u64() >> 11) * 2.0**-53

    def sample_without_replacement(self, n: int, k: int) -> list[int]:
        """Draw k distinct indices from range(n), in emission order.

        Each draw removes the chosen element by position (shift-down),
        so the emitted order is fully determined by the generator state.
        """
        if n < 0 or k < 0:
            raise ValueError("n and k must be non-negative")
        if k > n:
            raise ValueError(f"cannot draw {k} distinct indices from a population of {n}")
        candidates = list(range(n))
        drawn: list[int] = []
        for _ in range(k):
            idx = int(self.next_uniform() * len(candidates))
            drawn.append(candidates.pop(idx))
        return drawn
