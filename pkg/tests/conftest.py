import random
from fractions import Fraction

import pytest

from symtrans.linalg import Matrix
from symtrans.sampling import random_rational


def random_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix([[random_rational(rng) for _ in range(cols)] for _ in range(rows)])


@pytest.fixture
def rng():
    return random.Random(20260810)


def frac(num, den=1) -> Fraction:
    return Fraction(num, den)
