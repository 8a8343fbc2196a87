"""Seeded random generation of exact rational data.

Numerators and denominators are drawn from a bounded range (default
|num| <= 10, den <= 10) to keep coefficient growth in exact-arithmetic
suites under control.  Every sampler takes an explicit ``random.Random``
or integer seed; there is no hidden global state.
"""

import random
from fractions import Fraction

NUM_BOUND = 10
DEN_BOUND = 10


def as_rng(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed)


def random_rational(rng, num_bound: int = NUM_BOUND, den_bound: int = DEN_BOUND) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def random_nonzero_rational(rng, num_bound: int = NUM_BOUND, den_bound: int = DEN_BOUND) -> Fraction:
    while True:
        x = random_rational(rng, num_bound, den_bound)
        if x:
            return x


def random_int(rng, bound: int = NUM_BOUND) -> int:
    return rng.randint(-bound, bound)


def random_nonzero_int(rng, bound: int = NUM_BOUND) -> int:
    while True:
        v = rng.randint(-bound, bound)
        if v:
            return v


def random_vector(rng, dim: int) -> tuple:
    return tuple(random_rational(rng) for _ in range(dim))


def random_int_vector(rng, dim: int, bound: int = NUM_BOUND) -> tuple:
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim))
