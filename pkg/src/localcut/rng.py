"""Deterministic 64-bit random number generation.

The whole package draws randomness from a splitmix64 stream so that runs
are reproducible bit-for-bit across the compiled and pure-Python kernels.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z):
    """The splitmix64 output scrambler (one fixed 64-bit permutation)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """splitmix64 generator: state advances by a fixed odd constant."""

    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def below(self, n):
        """Uniform integer in [0, n).  Uses modulo reduction; the bias is
        below 2**-40 for every n used at desk scale."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def choice(self, seq):
        return seq[self.below(len(seq))]


def derive_seed(master_seed, index):
    """Per-trial seed: mix64(master ^ mix64(index + 1)).

    This is the documented mixing function used by the `trials` CLI
    command; trial i of master seed s is reproducible in isolation.
    """
    return mix64((master_seed & MASK64) ^ mix64(index + 1))


def bernoulli_threshold(num, den):
    """Threshold t such that (u < t) for a uniform 64-bit u happens exactly
    when u/2**64 < num/den, i.e. with the largest probability not above
    num/den representable on 64 bits.

    Returns min(t, 2**64) so callers can clamp probabilities >= 1.
    """
    if den <= 0 or num < 0:
        raise ValueError("threshold needs num >= 0, den > 0")
    if num >= den:
        return 1 << 64
    return ((num << 64) + den - 1) // den
