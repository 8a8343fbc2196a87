import random

import pytest

from symtrans.errors import InvalidDimension
from symtrans.hermitian import HermitianSpace, random_gl_complex
from symtrans.linalg import Matrix, Subspace
from symtrans.rational import GaussianRational
from symtrans.sampling import random_vector

SIGNATURES = [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1), (1, 3)]


@pytest.mark.parametrize("p,q", SIGNATURES)
def test_structure_identities(p, q):
    h = HermitianSpace(p, q)
    dim = h.dim
    eye = Matrix.identity(dim)
    J, G, W = h.j_matrix, h.gram, h.omega
    assert J @ J == -eye
    assert G.is_symmetric() and G.det() != 0
    assert J.transpose() @ G @ J == G          # g(J., J.) = g
    assert W.is_antisymmetric()
    # omega = g(J., .) as an exact matrix identity: J^T G = Omega
    assert J.transpose() @ G == W
    # g = omega(., J.): Omega J = G
    assert W @ J == G
    # omega(J., J.) = omega
    assert J.transpose() @ W @ J == W


@pytest.mark.parametrize("p,q,expected",
                         [(2, 0, 0), (1, 1, 1), (3, 2, 2), (2, 2, 2), (4, 0, 0)])
def test_max_isotropic_dim(p, q, expected):
    assert HermitianSpace(p, q).max_isotropic_dim() == expected


def test_metric_signature_counts():
    h = HermitianSpace(2, 1)
    diag = [h.gram[i, i] for i in range(6)]
    assert diag.count(1) == 4 and diag.count(-1) == 2


def test_complexify_realify_round_trip(rng):
    for p, q in ((1, 1), (2, 1)):
        h = HermitianSpace(p, q)
        for _ in range(20):
            v = random_vector(rng, h.dim)
            assert h.realify(h.complexify(v)) == v


def test_complexify_intertwines_j(rng):
    # zeta(J v) = i * zeta(v)
    for p, q in ((1, 1), (2, 2), (2, 1)):
        h = HermitianSpace(p, q)
        i_unit = GaussianRational(0, 1)
        for _ in range(10):
            v = random_vector(rng, h.dim)
            jv = h.complexify(h.j_matrix.apply(v))
            assert jv == tuple(i_unit * c for c in h.complexify(v))


def test_real_matrix_commutes_with_j(rng):
    h = HermitianSpace(2, 1)
    m = random_gl_complex(3, rng)
    real = h.real_matrix(m)
    assert real @ h.j_matrix == h.j_matrix @ real
    # action matches complex multiplication through the dictionary
    for _ in range(10):
        v = random_vector(rng, 6)
        assert h.complexify(real.apply(v)) == m.apply(h.complexify(v))


def test_hermitian_product_sesquilinear(rng):
    h = HermitianSpace(1, 1)
    z = h.complexify(random_vector(rng, 4))
    w = h.complexify(random_vector(rng, 4))
    i_unit = GaussianRational(0, 1)
    assert h.hermitian_product(tuple(i_unit * c for c in z), w) == \
        i_unit * h.hermitian_product(z, w)
    assert h.hermitian_product(z, tuple(i_unit * c for c in w)) == \
        -i_unit * h.hermitian_product(z, w)
    assert h.hermitian_product(w, z) == h.hermitian_product(z, w).conjugate()


def test_metric_is_real_part_of_h(rng):
    h = HermitianSpace(2, 1)
    for _ in range(10):
        x = random_vector(rng, 6)
        y = random_vector(rng, 6)
        hp = h.hermitian_product(h.complexify(x), h.complexify(y))
        assert hp.re == h.metric_eval(x, y)
        assert hp.im == -h.symplectic.omega_eval(x, y)


def test_random_isotropic_complex_exactness():
    rng = random.Random(83)
    for p, q in ((1, 1), (2, 1), (2, 2), (3, 1)):
        h = HermitianSpace(p, q)
        for k in range(h.max_isotropic_dim() + 1):
            cols = h.random_isotropic_complex(k, rng)
            assert cols.cols == k
            for i in range(k):
                for j in range(k):
                    assert not h.hermitian_product(cols.col(i), cols.col(j))
            # columns are independent over Q(i)
            if k:
                assert cols.rank() == k
        with pytest.raises(InvalidDimension):
            h.random_isotropic_complex(h.max_isotropic_dim() + 1, rng)


def test_definite_space_has_no_isotropic_lines():
    h = HermitianSpace(2, 0)
    assert h.max_isotropic_dim() == 0
    with pytest.raises(InvalidDimension):
        h.random_isotropic_complex(1, 1)


def test_isotropic_dual_basis_pairing():
    rng = random.Random(89)
    h = HermitianSpace(2, 2)
    w = h.random_isotropic_complex(2, rng)
    duals = h.isotropic_dual_basis(w)
    one, zero = GaussianRational(1), GaussianRational(0)
    for i in range(2):
        for j in range(2):
            assert h.hermitian_product(w.col(j), duals.col(i)) == (one if i == j else zero)
            assert h.hermitian_product(duals.col(i), duals.col(j)) == zero


def test_unitary_extension_is_unitary_and_extends():
    rng = random.Random(97)
    h = HermitianSpace(2, 2)
    w = h.random_isotropic_complex(2, rng)
    g = random_gl_complex(2, rng)
    ext = h.unitary_extension(w, g)
    # columns of w map to the g-combinations
    assert ext @ w == w @ g
    # real form is symplectic and metric-preserving
    real = h.real_matrix(ext)
    assert h.symplectic.is_symplectic_matrix(real)
    assert real.transpose() @ h.gram @ real == h.gram


def test_realify_complex_span_is_j_invariant():
    rng = random.Random(101)
    h = HermitianSpace(2, 1)
    w = h.random_isotropic_complex(1, rng)
    real = h.realify_complex_span(w)
    assert real.dim == 2
    assert real.transform(h.j_matrix) == real
    back = h.complex_subspace_of_real(real)
    # round trip spans the same complex line
    joined = w.hstack(back)
    assert joined.rank() == 1
