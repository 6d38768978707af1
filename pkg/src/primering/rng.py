"""Deterministic 64-bit pseudo-random generator.

SplitMix64 (Steele, Lea, Flood 2014; constants as published by Vigna,
public domain).  Chosen because the whole algorithm fits on a page, has
no external state, and produces the same stream on every platform, which
is what the sampling layer needs for reproducible runs.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Stream of 64-bit words from a single integer seed."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_uint64() >> 11) * 2.0**-53
