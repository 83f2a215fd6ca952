"""Deterministic 64-bit generator used for seeded random graphs and sampling.

The generator is splitmix64: a 64-bit counter advanced by the constant
0x9E3779B97F4A7C15, with the output mixed through two xor-shift-multiply
rounds (constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB). It is tiny,
has no state beyond one word, and is trivially reproducible in any
language, which is the whole point: the same seed must yield the same
graph everywhere. The exact update is spelled out in the README.
"""

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Stream of 64-bit words from a single seed."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def bernoulli(self, num: int, den: int) -> bool:
        """Exact-rational coin flip: true with probability num/den.

        Compares the next draw u against num/den via integer arithmetic
        (u * den < num * 2^64), so the result is bit-reproducible and the
        bias relative to the exact rational is below 2^-64.
        """
        return self.next_u64() * den < num << 64
