"""Portable, bit-reproducible 64-bit random generator.

Algorithm (so the stream can be reproduced in any language):

* Seeding: the integer seed (taken mod 2**64) initializes a SplitMix64 state.
  Four successive SplitMix64 outputs fill the xoshiro256** state s[0..3].
  SplitMix64 step: ``z = (x += 0x9E3779B97F4A7C15)``;
  ``z = (z ^ z>>30) * 0xBF58476D1CE4E5B9``; ``z = (z ^ z>>27) * 0x94D049BB133111EB``;
  output ``z ^ z>>31`` (all arithmetic mod 2**64).
* Output: xoshiro256**, ``rotl(s1 * 5, 7) * 9``, followed by the standard
  state update ``t = s1 << 17; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3;
  s2 ^= t; s3 = rotl(s3, 45)``.
* ``integer(lo, hi)``: uniform on the closed range via rejection. With
  ``n = hi - lo + 1`` and ``limit = 2**64 - (2**64 % n)``, draw until
  ``x < limit`` and return ``lo + x % n``.
* ``split()``: child generator seeded with the parent's next 64-bit output.
"""

MASK = (1 << 64) - 1


def _rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)


class Xoshiro256:
    """xoshiro256** seeded through SplitMix64."""

    def __init__(self, seed: int):
        sm = SplitMix64(seed)
        self.s = [sm.next() for _ in range(4)]

    def next(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & MASK, 7) * 9) & MASK
        t = (s[1] << 17) & MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        n = hi - lo + 1
        if n < 1:
            raise ValueError(f"empty range [{lo}, {hi}]")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next()
            if x < limit:
                return lo + x % n

    def split(self) -> "Xoshiro256":
        return Xoshiro256(self.next())
