"""Deterministic random primitives.

Everything in the toolkit that needs randomness draws it from a splitmix64
stream seeded either directly or via a SHA-256 digest of string parts.  This
keeps results byte-identical across runs, platforms, Python versions, and
worker scheduling, which library PRNGs do not guarantee.
"""

import hashlib

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def stable_hash(*parts) -> int:
    """64-bit integer digest of the stringified parts; stable everywhere."""
    payload = "\x1f".join(str(p) for p in parts).encode("utf-8")
    return int.from_bytes(hashlib.sha256(payload).digest()[:8], "little")


class SplitMix64:
    """Minimal splitmix64 generator (public-domain recurrence)."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randrange(self, n: int) -> int:
        # Modulo bias is < 2**-40 for n below 2**24; irrelevant at our scales
        # and kept for cross-implementation reproducibility.
        if n <= 0:
            raise ValueError("randrange() requires n > 0")
        return self.next_u64() % n

    def choice(self, seq):
        return seq[self.randrange(len(seq))]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle driven by this stream."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_rng(*parts) -> SplitMix64:
    """Independent stream keyed by the given parts."""
    return SplitMix64(stable_hash(*parts))
