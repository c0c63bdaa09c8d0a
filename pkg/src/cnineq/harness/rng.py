"""Deterministic, platform-independent pseudorandom numbers.

The generator is SplitMix64 (Steele, Lea and Flood): a 64-bit state advanced by
the odd constant 0x9E3779B97F4A7C15, with each output passed through the
finalizer

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

all modulo 2**64. Per-trial seeds are ``derive_seed(master, i)``: the finalizer
applied to ``master + (i + 1) * 0x9E3779B97F4A7C15``, i.e. the (i+1)-th output
of a SplitMix64 stream seeded with ``master``. Bounded integers use rejection
sampling on the top bits, so every draw is exactly uniform.
"""

from __future__ import annotations

from typing import MutableSequence

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master: int, index: int) -> int:
    return mix64(master + (index + 1) * GOLDEN)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        bits = (bound - 1).bit_length()
        while True:
            x = self.next_u64() >> (64 - bits) if bits else 0
            if x < bound:
                return x

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, items: MutableSequence) -> None:
        """Fisher-Yates, from the back."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
