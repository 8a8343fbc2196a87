"""Backend parity: the compiled kernels must agree with the pure fallback."""

import random

import numpy as np
import pytest

from symtrans._kernels import BACKEND, pure

try:
    from symtrans._kernels import _fast as fast
except ImportError:
    fast = None

needs_compiled = pytest.mark.skipif(fast is None, reason="compiled kernels unavailable")


def random_int_matrix(rng, rows, cols, bound=10**6):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


@needs_compiled
def test_matmul_parity():
    rng = random.Random(1)
    for _ in range(100):
        n, m, k = (rng.randint(1, 7) for _ in range(3))
        a = random_int_matrix(rng, n, m)
        b = random_int_matrix(rng, m, k, bound=50)
        assert fast.int_matmul(a, b) == pure.int_matmul(a, b)


@needs_compiled
def test_bigint_matmul_parity():
    rng = random.Random(2)
    a = random_int_matrix(rng, 4, 4, bound=10**40)
    b = random_int_matrix(rng, 4, 4, bound=10**40)
    assert fast.int_matmul(a, b) == pure.int_matmul(a, b)


@needs_compiled
def test_commutator_and_product_parity():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 6)
        a = random_int_matrix(rng, n, n, bound=9)
        b = random_int_matrix(rng, n, n, bound=9)
        assert fast.int_commutator_is_zero(a, b) == pure.int_commutator_is_zero(a, b)
        assert fast.int_product_is_zero(a, b) == pure.int_product_is_zero(a, b)
        zero = [[0] * n for _ in range(n)]
        assert fast.int_product_is_zero(a, zero)
        assert fast.int_commutator_is_zero(a, a)


@needs_compiled
def test_rref_parity():
    rng = random.Random(4)
    for _ in range(300):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        m = random_int_matrix(rng, rows, cols, bound=20)
        assert fast.int_rref([r[:] for r in m]) == pure.int_rref([r[:] for r in m])


@needs_compiled
def test_det_parity():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 7)
        m = random_int_matrix(rng, n, n, bound=30)
        assert fast.int_det(m) == pure.int_det(m)


def test_det_oracle_cofactor_expansion():
    # independent 3x3 oracle for the fraction-free determinant
    rng = random.Random(6)
    for _ in range(100):
        m = random_int_matrix(rng, 3, 3, bound=15)
        oracle = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        assert pure.int_det(m) == oracle
        if fast is not None:
            assert fast.int_det(m) == oracle


@needs_compiled
def test_rk4_parity():
    rng = np.random.RandomState(7)
    for trial in range(10):
        d = int(rng.randint(2, 9))
        tensor = np.ascontiguousarray(rng.uniform(-1, 1, (d, d, d)))
        x0 = np.ascontiguousarray(rng.uniform(-1, 1, d))
        v0 = np.ascontiguousarray(rng.uniform(-1, 1, d))
        steps = 200
        ts_f = np.empty(steps + 1)
        xs_f = np.empty((steps + 1, d))
        ts_p = np.empty(steps + 1)
        xs_p = np.empty((steps + 1, d))
        fast.rk4_fill(tensor, x0, v0, 1e-3, steps, ts_f, xs_f)
        pure.rk4_fill(tensor, x0, v0, 1e-3, steps, ts_p, xs_p)
        assert np.array_equal(ts_f, ts_p)
        assert np.max(np.abs(xs_f - xs_p)) < 1e-12


def test_backend_reports_a_known_value():
    assert BACKEND in ("compiled", "pure")
