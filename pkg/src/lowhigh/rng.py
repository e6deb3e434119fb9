"""SplitMix64, a tiny portable 64-bit generator for reproducible workloads.

State advances by the golden-ratio increment ``0x9E3779B97F4A7C15``; output
is mixed with the multipliers ``0xBF58476D1CE4E5B9`` and ``0x94D049BB133111EB``
and shifts 30, 27, 31 (Steele, Lea and Flood, 2014). Any language with
64-bit wrapping arithmetic reproduces the same sequence from the same seed.
"""

from __future__ import annotations

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK
        z = ((z ^ (z >> 27)) * MIX2) & MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection, so no modulo bias."""
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, k: int, n: int) -> list[int]:
        """``k`` distinct indices from ``range(n)`` in random order."""
        if not 0 <= k <= n:
            raise ValueError("sample size out of range")
        idx = list(range(n))
        for i in range(k):
            j = i + self.below(n - i)
            idx[i], idx[j] = idx[j], idx[i]
        return idx[:k]
