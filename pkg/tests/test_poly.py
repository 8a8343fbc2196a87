from fractions import Fraction

import pytest

from symtrans.poly import Poly
from symtrans.rational import GaussianRational


def test_ring_ops():
    x = Poly.variable(2, 0)
    y = Poly.variable(2, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert (p - p).is_zero()
    assert (x + 1) ** 2 == x * x + 2 * x + 1


def test_partial_derivative():
    x = Poly.variable(2, 0)
    y = Poly.variable(2, 1)
    f = x ** 3 * y + y * 2
    assert f.partial(0) == 3 * x ** 2 * y
    assert f.partial(1) == x ** 3 + Poly.constant(2, 2)
    assert f.partial(0).partial(1) == 3 * x ** 2
    # mixed partials commute
    assert f.partial(0).partial(1) == f.partial(1).partial(0)


def test_evaluate_gaussian():
    x = Poly.variable(1, 0)
    i = GaussianRational(0, 1)
    f = x ** 2 + 1
    assert f.evaluate([i]) == GaussianRational(0)
    assert f.evaluate([Fraction(1, 2)]) == GaussianRational(Fraction(5, 4))


def test_substitute_linear_change():
    x = Poly.variable(2, 0)
    y = Poly.variable(2, 1)
    f = x * y
    u = Poly.variable(2, 0) + Poly.variable(2, 1)
    v = Poly.variable(2, 0) - Poly.variable(2, 1)
    g = f.substitute([u, v])
    assert g == Poly.variable(2, 0) ** 2 - Poly.variable(2, 1) ** 2


def test_substitute_into_more_variables():
    f = Poly.variable(1, 0) ** 3
    image = Poly.variable(2, 0) + Poly.variable(2, 1) * GaussianRational(0, 1)
    g = f.substitute([image])
    assert g.nvars == 2
    assert g.evaluate([1, 0]) == GaussianRational(1)
    assert g.evaluate([0, 1]) == GaussianRational(0, -1)  # (i)^3 = -i


def test_total_degree_and_real_part():
    x = Poly.variable(1, 0)
    f = x ** 4 * GaussianRational(1, 2) + x
    assert f.total_degree() == 4
    assert f.real_part_coefficients() == x ** 4 + x
    assert Poly.zero(3).total_degree() == 0


def test_bad_arity_rejected():
    with pytest.raises(ValueError):
        Poly(2, {(1,): 1})
    with pytest.raises(ValueError):
        Poly.variable(2, 0).evaluate([1])
    with pytest.raises(ValueError):
        Poly.variable(2, 0) + Poly.variable(3, 0)
