import random
from fractions import Fraction
from math import comb

import pytest

from symtrans.cubic import act
from symtrans.errors import NonConstantCubic
from symtrans.hermitian import HermitianSpace, random_gl_complex
from symtrans.kahler import (
    HoloPotential,
    SKStructure,
    anticommutation_solution_basis,
    complex_support_dim,
    realize_s,
    rigidity_solution_dim,
    sample_potential,
    third_derivative_tensor,
)
from symtrans.linalg import Matrix
from symtrans.poly import Poly
from symtrans.rational import GaussianRational, gauss
from symtrans.sampling import random_vector

H11 = HermitianSpace(1, 1)
H22 = HermitianSpace(2, 2)


def pot(space, poly) -> HoloPotential:
    return HoloPotential(space, poly)


def cube_potential(space) -> HoloPotential:
    # cubic in the isotropic direction pairing the first +axis and -axis
    z = [Poly.variable(space.n, i) for i in range(space.n)]
    return pot(space, (z[0] + z[space.p]) ** 3)


# -- third derivatives ------------------------------------------------------

def test_third_derivative_cube():
    f = pot(H11, Poly.variable(2, 0) ** 3)
    for point in ((0, 0), (3, GaussianRational(1, 2))):
        assert third_derivative_tensor(f, point) == {(0, 0, 0): GaussianRational(6)}


def test_third_derivative_quadratic_vanishes():
    f = pot(H11, Poly.variable(2, 0) ** 2 + Poly.variable(2, 1) * 5)
    assert third_derivative_tensor(f, (1, 2)) == {}


def test_third_derivative_mixed_quartic():
    z0, z1 = Poly.variable(2, 0), Poly.variable(2, 1)
    f = pot(H11, z0 ** 3 * z1)
    t = third_derivative_tensor(f, (0, 1))
    assert t == {(0, 0, 0): GaussianRational(6)}
    t2 = third_derivative_tensor(f, (GaussianRational(1), GaussianRational(2)))
    assert t2[(0, 0, 0)] == GaussianRational(12)
    assert t2[(0, 0, 1)] == GaussianRational(6)


def test_third_derivative_totally_symmetric_storage():
    z0, z1 = Poly.variable(2, 0), Poly.variable(2, 1)
    f = pot(H11, z0 ** 2 * z1)
    t = third_derivative_tensor(f, (5, 7))
    assert set(t) == {(0, 0, 1)}
    assert t[(0, 0, 1)] == GaussianRational(2)


# -- realization ---------------------------------------------------------------

def test_realize_zero_potential():
    assert realize_s(pot(H11, Poly.zero(2)), (1, 2, 3, 4)).is_zero()


def test_realized_form_anticommutes_with_j(rng):
    for space in (H11, H22):
        f = cube_potential(space)
        for _ in range(5):
            point = random_vector(rng, space.dim)
            s = realize_s(f, point)
            assert s.anticommutes_with(space.j_matrix)


def test_realized_support_is_realified_complex_support(rng):
    rnd = random.Random(7)
    for space in (H11, H22):
        k = space.max_isotropic_dim()
        w = space.random_isotropic_complex(k, rnd)
        f = sample_potential(space, w, 4, rnd)
        for _ in range(5):
            point = random_vector(rng, space.dim)
            s = realize_s(f, point)
            cdim = complex_support_dim(f, space.complexify(point))
            assert s.support().dim == 2 * cdim


def test_realized_support_is_conjugate_span():
    # f = (z1 + z2)^3 has coefficient direction m = (1, 1); the realized
    # support is the realification of eps * m = (1, -1), conjugation acting
    # trivially on real directions
    f = cube_potential(H11)
    s = realize_s(f, (0, 0, 0, 0))
    w = Matrix.from_cols([[GaussianRational(1), GaussianRational(-1)]], rows=2)
    assert s.support() == H11.realify_complex_span(w)


def test_sampler_support_dictionary():
    # potentials sampled on complex isotropic columns w realize with support
    # equal to the realified conjugate span of w
    rnd = random.Random(23)
    for space, k in ((H11, 1), (H22, 2)):
        for _ in range(5):
            w = space.random_isotropic_complex(k, rnd)
            f = sample_potential(space, w, 3, rnd)
            s = realize_s(f, tuple(Fraction(rnd.randint(-3, 3)) for _ in range(space.dim)))
            conj = Matrix.from_cols(
                [[gauss(c).conjugate() for c in w.col(j)] for j in range(k)],
                rows=space.n)
            assert s.support() == space.realify_complex_span(conj)


def test_gaussian_coefficients_and_rational_points_stay_rational(rng):
    z0, z1 = Poly.variable(2, 0), Poly.variable(2, 1)
    f = pot(H11, (z0 + z1) ** 3 * GaussianRational(Fraction(1, 3), Fraction(2, 5)))
    s = realize_s(f, (Fraction(1, 2), 1, 2, Fraction(-1, 3)))
    assert all(isinstance(v, Fraction) for v in s.coeffs.values())


# -- flatness verification -------------------------------------------------------

def test_flat_zero_potential_is_trivial():
    sk = SKStructure(pot(H11, Poly.zero(2)))
    report = sk.check_flat([(1, 2, 3, 4), (0, 0, 0, 0)])
    assert report.passed


def test_flat_indefinite_example_passes_everywhere(rng):
    sk = SKStructure(cube_potential(H11))
    points = [random_vector(rng, 4) for _ in range(5)]
    report = sk.check_flat(points)
    assert report.passed
    assert sk.is_constant_cubic


def test_flat_definite_cubic_fails():
    h20 = HermitianSpace(2, 0)
    sk = SKStructure(pot(h20, Poly.variable(2, 0) ** 3))
    verdicts = {v.name: v.passed for v in sk.check_flat_at((0, 0, 0, 0))}
    assert not verdicts["commuting-contractions"] or not verdicts["anticommutes-with-J"]
    s = sk.s_at((0, 0, 0, 0))
    assert not s.space.is_isotropic(s.support())


def test_flat_degree_four_and_derivative_symmetry(rng):
    rnd = random.Random(11)
    w = H11.random_isotropic_complex(1, rnd)
    f = sample_potential(H11, w, 4, rnd)
    sk = SKStructure(f)
    assert not sk.is_constant_cubic
    for _ in range(3):
        point = random_vector(rng, 4)
        verdicts = sk.check_flat_at(point)
        assert all(v.passed for v in verdicts), [v.name for v in verdicts if not v.passed]


def test_derivative_cubic_vanishes_for_constant():
    sk = SKStructure(cube_potential(H22))
    point = (1, 2, 3, 4, 5, 6, 7, 8)
    for i in range(8):
        assert sk.derivative_cubic_at(i, point).is_zero()


def test_levi_civita_relation_exact(rng):
    # 2 S_X = J (nabla_X J) with nabla J = [S_X, J]
    sk = SKStructure(cube_potential(H11))
    point = random_vector(rng, 4)
    s = sk.s_at(point)
    j = H11.j_matrix
    for m in s.endo_matrices():
        assert j @ (m @ j - j @ m) == m * 2


# -- trivial factors --------------------------------------------------------------

def test_trivial_factor_zero_tensor():
    sk = SKStructure(pot(H11, Poly.zero(2)))
    v0, v1 = sk.trivial_factor_split()
    assert v0.dim == 4 and v1.dim == 0


def test_no_trivial_factor_for_regular_lagrangian_support():
    sk = SKStructure(cube_potential(H11))
    assert sk.trivial_factor_split() is None


def test_trivial_factor_small_support():
    h21 = HermitianSpace(2, 1)
    z = [Poly.variable(3, i) for i in range(3)]
    sk = SKStructure(pot(h21, (z[0] + z[2]) ** 3))
    v0, v1 = sk.trivial_factor_split()
    assert v0.dim == 2 and v1.dim == 4
    sigma = sk.s_at((0,) * 6)
    assert all(sigma.endo(v).is_zero() for v in v0.basis_vectors())
    # V0 is J-invariant and metric-nondegenerate
    assert v0.transform(h21.j_matrix) == v0
    gram = Matrix([[h21.metric_eval(a, b) for b in v0.basis_vectors()]
                   for a in v0.basis_vectors()])
    assert gram.det() != 0


def test_trivial_factor_requires_constant_cubic():
    rnd = random.Random(13)
    f = sample_potential(H11, H11.random_isotropic_complex(1, rnd), 4, rnd)
    sk = SKStructure(f)
    with pytest.raises(NonConstantCubic):
        sk.trivial_factor_split()


# -- rigidity ---------------------------------------------------------------------

@pytest.mark.parametrize("p", [1, 2, 3])
def test_rigidity_definite_solution_space_trivial(p):
    space = HermitianSpace(p, 0)
    assert rigidity_solution_dim(space) == 0
    basis = anticommutation_solution_basis(space)
    assert len(basis) == 2 * comb(p + 2, 3)
    for b in basis:
        # every nonzero pure-type cubic on a definite space leaves the cone
        assert b.commutator_witness() is not None
        supp = b.support()
        assert supp.transform(space.j_matrix) == supp
        assert not space.symplectic.is_isotropic(supp)


def test_anticommutation_space_dimension_indefinite():
    assert len(anticommutation_solution_basis(H11)) == 2 * comb(4, 3)


# -- equivalence under the unitary group --------------------------------------------

def test_unitary_intertwining_of_structures():
    rnd = random.Random(17)
    for space, k in ((H11, 1), (H22, 2)):
        w = space.random_isotropic_complex(k, rnd)
        f = sample_potential(space, w, 3, rnd)
        g = random_gl_complex(k, rnd)
        ext = space.unitary_extension(w, g)
        ext_real = space.real_matrix(ext)
        ext_inv = ext.inverse()
        images = []
        for i in range(space.n):
            p = Poly.zero(space.n)
            for j in range(space.n):
                if ext_inv[i, j]:
                    p = p + Poly.variable(space.n, j) * gauss(ext_inv[i, j])
            images.append(p)
        moved = HoloPotential(space, f.poly.substitute(images))
        for _ in range(3):
            point = random_vector(random.Random(rnd.randint(0, 10**6)), space.dim)
            lhs = realize_s(moved, ext_real.apply(point))
            rhs = act(ext_real, realize_s(f, point))
            assert lhs == rhs


# -- support dimension bound ---------------------------------------------------------

def test_complex_support_never_exceeds_min_pq(rng):
    rnd = random.Random(19)
    for p, q in ((1, 1), (2, 1), (2, 2), (3, 1)):
        space = HermitianSpace(p, q)
        bound = space.max_isotropic_dim()
        for k in range(bound + 1):
            w = space.random_isotropic_complex(k, rnd)
            f = sample_potential(space, w, 3, rnd) if k else pot(space, Poly.zero(space.n))
            point = random_vector(rng, space.dim)
            s = realize_s(f, point)
            assert s.in_c_j(space.j_matrix)
            assert complex_support_dim(f, space.complexify(point)) <= bound
