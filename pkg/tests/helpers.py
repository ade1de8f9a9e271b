"""Random exact inputs for property-style tests."""

from fractions import Fraction


def rand_q(rng, lo=-9, hi=9, den=6, nonzero=False):
    while True:
        x = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if x or not nonzero:
            return x
