import random
from fractions import Fraction

import pytest

from symtrans.errors import DimensionMismatch, InvalidDimension, NotIsotropic
from symtrans.linalg import Matrix, Subspace
from symtrans.sampling import random_vector
from symtrans.symplectic import SymplecticSpace


def test_omega_is_darboux():
    sp = SymplecticSpace(2)
    assert sp.omega.is_antisymmetric()
    assert sp.omega @ sp.omega == -Matrix.identity(4)
    assert sp.omega_eval((1, 0, 0, 0), (0, 0, 1, 0)) == 1


def test_omega_eval_examples():
    sp = SymplecticSpace(1)
    assert sp.omega_eval((1, 0), (0, 1)) == 1
    assert sp.omega_eval((1, 0), (1, 0)) == 0
    assert sp.omega_eval((1, 2), (3, 4)) == -2


def test_omega_eval_bilinear_antisymmetric(rng):
    sp = SymplecticSpace(3)
    for _ in range(50):
        x, y, z = (random_vector(rng, 6) for _ in range(3))
        c = Fraction(3, 7)
        assert sp.omega_eval(x, y) == -sp.omega_eval(y, x)
        xs = tuple(c * a + b for a, b in zip(x, z))
        assert sp.omega_eval(xs, y) == c * sp.omega_eval(x, y) + sp.omega_eval(z, y)


def test_omega_eval_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        SymplecticSpace(2).omega_eval((1, 0), (0, 1))


def test_omega_dual_and_solve_are_inverse(rng):
    sp = SymplecticSpace(2)
    for _ in range(20):
        v = random_vector(rng, 4)
        assert sp.omega_solve(sp.omega_dual(v))  # nonzero generically
        covector = sp.omega_dual(v)
        u = sp.omega_solve(covector)
        # omega(u, e_k) must reproduce the covector
        assert sp.omega_dual(u) == covector
        assert u == v


def test_isotropy_examples():
    sp = SymplecticSpace(2)
    lagr = Subspace(4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert sp.is_isotropic(lagr) and sp.is_lagrangian(lagr)
    mixed = Subspace(4, [(1, 0, 0, 0), (0, 0, 1, 0)])
    assert not sp.is_isotropic(mixed)
    line = Subspace(4, [(1, 0, 0, 0)])
    assert sp.is_isotropic(line) and not sp.is_lagrangian(line)


def test_random_symplectic_200_samples_exact():
    sp = SymplecticSpace(2)
    rng = random.Random(7)
    for _ in range(200):
        g = sp.random_symplectic(rng)
        assert g.transpose() @ sp.omega @ g == sp.omega
        assert g.det() == 1


def test_symplectic_preserves_omega(rng):
    sp = SymplecticSpace(3)
    for seed in range(30):
        g = sp.random_symplectic(seed)
        x, y = random_vector(rng, 6), random_vector(rng, 6)
        assert sp.omega_eval(g.apply(x), g.apply(y)) == sp.omega_eval(x, y)


def test_random_isotropic_is_isotropic_every_seed():
    sp = SymplecticSpace(3)
    for seed in range(60):
        k = seed % 4
        w = sp.random_isotropic(k, seed)
        assert w.dim == k
        assert sp.is_isotropic(w)
    for seed in range(20):
        assert sp.is_lagrangian(sp.random_lagrangian(seed))


def test_random_isotropic_zero_and_identity_cases():
    sp = SymplecticSpace(2)
    assert sp.random_isotropic(0, 1) == Subspace.zero(4)
    with pytest.raises(InvalidDimension):
        sp.random_isotropic(3, 1)


def test_darboux_completion_extends_isotropic():
    sp = SymplecticSpace(3)
    for seed in range(25):
        k = seed % 4
        w = sp.random_isotropic(k, seed)
        frame = sp.darboux_completion(w)
        assert sp.is_symplectic_matrix(frame)
        # first k columns span w
        first = Subspace(6, [frame.col(j) for j in range(k)]) if k else Subspace.zero(6)
        assert first == w


def test_darboux_completion_rejects_nonisotropic():
    sp = SymplecticSpace(2)
    bad = Subspace(4, [(1, 0, 0, 0), (0, 0, 1, 0)])
    with pytest.raises(NotIsotropic):
        sp.darboux_completion(bad)


def test_compatible_j_check():
    sp = SymplecticSpace(2)
    from symtrans.hermitian import HermitianSpace

    for p, q in ((2, 0), (1, 1), (0, 2)):
        h = HermitianSpace(p, q)
        assert sp.check_compatible_j(h.j_matrix)
    assert not sp.check_compatible_j(Matrix.identity(4))
