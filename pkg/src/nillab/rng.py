"""Deterministic 64-bit PRNG for reproducible experiments.

SplitMix64, pinned bit-exactly so that identical seeds give identical
streams on every platform.  Bounded draws use rejection sampling, so each
value in [-bound, bound] is exactly equally likely.
"""

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = s = (self.state + _GAMMA) & MASK64
        z = ((s ^ (s >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def rand_int(self, bound):
        """Uniform integer in [-bound, bound] via rejection sampling."""
        if bound < 1:
            raise ValueError("bound must be at least 1")
        span = 2 * bound + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % span - bound


def rand_int(rng, bound):
    return rng.rand_int(bound)


def trial_seed(master_seed, index):
    """Seed for an independent per-trial stream.

    Trial ``index`` uses the stream seeded by the (index+1)-th output of a
    SplitMix64 run from the master seed, so trials never share state.
    """
    g = SplitMix64(master_seed)
    for _ in range(index):
        g.next_u64()
    return g.next_u64()
