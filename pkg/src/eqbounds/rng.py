"""Seeded 64-bit generator used by every randomized driver.

The generator is SplitMix64 (Steele, Lea, Flood 2014): a single 64-bit
state advanced by a fixed odd constant, scrambled by two xor-multiply
rounds.  It is specified here in full so that runs are reproducible
bit-for-bit from the seed alone, independent of interpreter version or
platform.

    state   <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z       <- state
    z       <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z       <- (z xor (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output  <- z xor (z >> 31)

Per-trial streams are derived with ``derive_seed(seed, index)`` =
``mix(seed xor mix(index xor 0xA3EC647659359ACD))`` where ``mix`` is the
scramble above applied to a raw word, so trials are independent of the
order in which a driver schedules them.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_DERIVE_SALT = 0xA3EC647659359ACD


def _mix(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Child seed for trial `index`; independent of scheduling order."""
    return _mix((seed & MASK64) ^ _mix((index & MASK64) ^ _DERIVE_SALT))


class SplitMix64:
    """Deterministic stream of 64-bit words with uniform integer draws."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        return _mix(self.state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], rejection-sampled (no modulo bias)."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            w = self.next_u64()
            if w < limit:
                return lo + (w % span)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]
