"""SplitMix64, the seeded generator behind every randomized suite.

Kept to the published constants so sample streams reproduce exactly in
any language::

    state += 0x9E3779B97F4A7C15
    z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

Uniform doubles take the top 53 bits: ``(z >> 11) * 2**-53``.
"""

from __future__ import annotations

import zlib

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def signed_band(self, lo: float, hi: float) -> float:
        """Uniform magnitude in [lo, hi] with a random sign."""
        mag = self.uniform(lo, hi)
        return -mag if self.next_u64() & 1 else mag

    def spawn(self, label: str) -> SplitMix64:
        """Independent stream keyed by ``label`` (stable across runs)."""
        return SplitMix64(self.next_u64() ^ zlib.crc32(label.encode()))


def stream(seed: int, label: str) -> SplitMix64:
    return SplitMix64(seed).spawn(label)
