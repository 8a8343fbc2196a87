"""Pseudo-Hermitian vector spaces over the fixed Darboux symplectic space.

Real coordinates are (x_1..x_n, y_1..y_n).  The metric Gram matrix is
diagonal with signature signs eps = (+1 x p, -1 x q) on both blocks, and
the complex structure carries the signature twist,

    J = [[0, -eps], [eps, 0]],    g = diag(eps, eps),

so that the Kahler form omega(X, Y) = g(JX, Y) is exactly the Darboux
Gram matrix of the underlying symplectic space.  The J-holomorphic
coordinate on the j-th line is zeta_j = x_j + i eps_j y_j.
"""

from dataclasses import dataclass
from fractions import Fraction

from symtrans.errors import DimensionMismatch, InvalidDimension
from symtrans.linalg import Matrix, Subspace, vec
from symtrans.rational import GaussianRational, gauss
from symtrans.symplectic import SymplecticSpace


class HermitianSpace:
    """C^n with a pseudo-Hermitian metric of complex signature (p, q)."""

    __slots__ = ("n", "p", "q", "eps", "symplectic", "j_matrix", "gram")

    def __init__(self, p: int, q: int):
        if p < 0 or q < 0 or p + q < 1:
            raise InvalidDimension(f"bad signature ({p}, {q})")
        n = p + q
        eps = tuple([1] * p + [-1] * q)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "symplectic", SymplecticSpace(n))
        dim = 2 * n
        j_rows = []
        for a in range(dim):
            row = [0] * dim
            if a < n:
                row[n + a] = -eps[a]
            else:
                row[a - n] = eps[a - n]
            j_rows.append(row)
        object.__setattr__(self, "j_matrix", Matrix(j_rows))
        object.__setattr__(self, "gram", Matrix.diagonal(list(eps) + list(eps)))
        assert self.symplectic.check_compatible_j(self.j_matrix)

    def __setattr__(self, name, value):
        raise AttributeError("HermitianSpace is immutable")

    def __eq__(self, other):
        return isinstance(other, HermitianSpace) and (self.p, self.q) == (other.p, other.q)

    def __hash__(self):
        return hash(("HermitianSpace", self.p, self.q))

    def __repr__(self):
        return f"HermitianSpace(p={self.p}, q={self.q})"

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def omega(self) -> Matrix:
        return self.symplectic.omega

    def metric_eval(self, x, y) -> Fraction:
        x, y = vec(x), vec(y)
        gy = self.gram.apply(y)
        return sum(a * b for a, b in zip(x, gy))

    def max_isotropic_dim(self) -> int:
        """Maximal complex dimension of a metric-isotropic complex subspace."""
        return min(self.p, self.q)

    # -- real/complex dictionary -----------------------------------------

    def complexify(self, v) -> tuple:
        """Real 2n-vector -> J-holomorphic coordinates zeta_j = x_j + i eps_j y_j."""
        v = vec(v)
        if len(v) != self.dim:
            raise DimensionMismatch("real vector has wrong length")
        n = self.n
        return tuple(
            GaussianRational(v[j], self.eps[j] * v[n + j]) for j in range(n)
        )

    def realify(self, z) -> tuple:
        """Inverse of complexify: x_j = Re z_j, y_j = eps_j Im z_j."""
        z = [gauss(c) for c in z]
        if len(z) != self.n:
            raise DimensionMismatch("complex vector has wrong length")
        xs = [c.re for c in z]
        ys = [self.eps[j] * z[j].im for j in range(self.n)]
        return tuple(xs + ys)

    def real_matrix(self, m: Matrix) -> Matrix:
        """Real 2n x 2n form of a complex-linear map (n x n over Q(i))."""
        if m.shape != (self.n, self.n):
            raise DimensionMismatch("complex matrix must be n x n")
        n = self.n
        eps = self.eps
        a = [[gauss(m[i, j]).re for j in range(n)] for i in range(n)]
        b = [[gauss(m[i, j]).im for j in range(n)] for i in range(n)]
        # zeta' = M zeta with zeta_j = x_j + i eps_j y_j gives the block form
        # [[A, -B eps], [eps B, eps A eps]].
        top = [[a[i][j] for j in range(n)] + [-b[i][j] * eps[j] for j in range(n)]
               for i in range(n)]
        bottom = [[eps[i] * b[i][j] for j in range(n)]
                  + [eps[i] * a[i][j] * eps[j] for j in range(n)]
                  for i in range(n)]
        return Matrix(top + bottom)

    def hermitian_product(self, z, w) -> GaussianRational:
        """h(z, w) = sum_j eps_j z_j conj(w_j); linear in z."""
        z = [gauss(c) for c in z]
        w = [gauss(c) for c in w]
        total = GaussianRational(0)
        for j in range(self.n):
            total = total + self.eps[j] * z[j] * w[j].conjugate()
        return total

    def complex_subspace_of_real(self, real_sub: Subspace) -> Matrix:
        """Complex basis (columns, n x k over Q(i)) of a J-invariant real subspace."""
        if real_sub.transform(self.j_matrix) != real_sub:
            raise ValueError("subspace is not J-invariant")
        if real_sub.dim % 2:
            raise ValueError("J-invariant subspace has odd dimension")
        k = real_sub.dim // 2
        chosen = []
        span_so_far = []
        for v in real_sub.basis_vectors():
            candidate = span_so_far + [v, self.j_matrix.apply(v)]
            if Subspace(self.dim, candidate).dim == len(span_so_far) + 2:
                chosen.append(self.complexify(v))
                span_so_far = candidate
            if len(chosen) == k:
                break
        if len(chosen) != k:
            raise AssertionError("failed to extract a complex basis")
        return Matrix.from_cols(chosen, rows=self.n)

    def realify_complex_span(self, cols: Matrix) -> Subspace:
        """The J-invariant real subspace spanned by complex column vectors."""
        vectors = []
        for j in range(cols.cols):
            z = cols.col(j)
            vectors.append(self.realify(z))
            vectors.append(self.realify([gauss(c) * GaussianRational(0, 1) for c in z]))
        return Subspace(self.dim, vectors)

    # -- Hermitian completion ------------------------------------------------

    def isotropic_dual_basis(self, w_cols: Matrix) -> Matrix:
        """Columns w'_i with h(w_j, w'_i) = delta_ij and h(w'_i, w'_j) = 0.

        Requires the columns of w_cols to span a metric-isotropic complex
        subspace; mirrors the Darboux completion on the symplectic side.
        """
        k = w_cols.cols
        n = self.n
        cols = [w_cols.col(j) for j in range(k)]
        for i in range(k):
            for j in range(k):
                if self.hermitian_product(cols[i], cols[j]):
                    raise ValueError("columns do not span an isotropic subspace")
        # h(w_j, y) = delta_ij is antilinear in y: solve for conj(y).
        rows = Matrix([
            [self.eps[c] * gauss(cols[j][c]) for c in range(n)]
            for j in range(k)
        ])
        duals = []
        for i in range(k):
            rhs = [GaussianRational(1 if r == i else 0) for r in range(k)]
            ybar = _complex_solve(rows, rhs)
            duals.append(tuple(c.conjugate() for c in ybar))
        # correction y_i += sum_j lam_ij w_j, lam_ij = -h(y_i, y_j)/2 kills
        # the mutual products while preserving the pairing with the w's.
        corrected = []
        for i in range(k):
            v = list(duals[i])
            for j in range(k):
                lam = -self.hermitian_product(duals[i], duals[j]) / 2
                v = [x + lam * y for x, y in zip(v, cols[j])]
            corrected.append(tuple(v))
        out = Matrix.from_cols(corrected, rows=n)
        for i in range(k):
            for j in range(k):
                assert self.hermitian_product(cols[j], out.col(i)) == GaussianRational(1 if i == j else 0)
                assert not self.hermitian_product(out.col(i), out.col(j))
        return out

    def orthogonal_complement(self, cols: Matrix) -> Matrix:
        """Complex basis of {v : h(v, col_j) = 0 for all j}."""
        n = self.n
        constraint = Matrix([
            [self.eps[c] * gauss(cols.col(j)[c]).conjugate() for c in range(n)]
            for j in range(cols.cols)
        ])
        basis = constraint.kernel_basis()
        return Matrix.from_cols(basis, rows=n)

    def standard_isotropic_complex(self, pairing) -> Matrix:
        """Columns e_a + phase * e_{p+b} for (a, b, phase) in pairing;
        each column is metric-isotropic because eps_a = -eps_{p+b}."""
        cols = []
        for a, b, phase in pairing:
            col = [GaussianRational(0)] * self.n
            col[a] = GaussianRational(1)
            col[self.p + b] = gauss(phase)
            cols.append(col)
        return Matrix.from_cols(cols, rows=self.n)

    def random_isotropic_complex(self, k: int, seed) -> Matrix:
        """Random h-isotropic complex subspace of dimension k (columns).

        Built from a standard pairing of positive and negative axes pushed
        around by exact unitary extensions with random invertible blocks,
        in the same spirit as the symplectic generator sampler.
        """
        from symtrans import sampling

        bound = self.max_isotropic_dim()
        if not 0 <= k <= bound:
            raise InvalidDimension(
                f"isotropic complex dimension {k} not in 0..{bound}")
        if k == 0:
            return Matrix.zeros(self.n, 0)
        rng = sampling.as_rng(seed)
        base = self.standard_isotropic_complex(
            [(m, m, GaussianRational(1)) for m in range(k)])
        gamma = Matrix.identity(self.n)
        for _ in range(2):
            a_axes = rng.sample(range(self.p), bound)
            b_axes = rng.sample(range(self.q), bound)
            phases = [GaussianRational(1), GaussianRational(0, 1),
                      GaussianRational(-1), GaussianRational(0, -1)]
            pairing = [(a, b, rng.choice(phases)) for a, b in zip(a_axes, b_axes)]
            mix = self.standard_isotropic_complex(pairing)
            gamma = gamma @ self.unitary_extension(mix, random_gl_complex(bound, rng))
        return gamma @ base

    def unitary_extension(self, u_cols: Matrix, g: Matrix) -> Matrix:
        """Extend g in GL_C(U), U spanned by isotropic u_cols, to a map
        preserving h on all of C^n (complex n x n matrix).

        Acts as g on U, as the inverse conjugate-transpose on the dual
        isotropic complement, and as the identity on the orthogonal rest.
        """
        k = u_cols.cols
        if g.shape != (k, k):
            raise ValueError(f"g must be {k}x{k}")
        duals = self.isotropic_dual_basis(u_cols)
        rest = self.orthogonal_complement(u_cols.hstack(duals))
        # columns: images of the frame (U | U' | rest)
        frame_cols = u_cols.hstack(duals).hstack(rest)
        g_inv_h = g.conjugate().transpose().inverse()
        image_u = u_cols @ g
        image_dual = duals @ g_inv_h
        images = image_u.hstack(image_dual).hstack(rest)
        ext = images @ frame_cols.inverse()
        # exact unitarity check: h(ext z, ext w) = h(z, w) on the basis
        for i in range(self.n):
            for j in range(self.n):
                zi = ext.col(i)
                zj = ext.col(j)
                expected = GaussianRational(self.eps[i] if i == j else 0)
                assert self.hermitian_product(zi, zj) == expected
        return ext


def random_gl_complex(k: int, rng) -> Matrix:
    """Random invertible k x k over Q(i) as L*U*D with unit triangles."""
    from symtrans import sampling

    lower = [[GaussianRational(1 if i == j else 0) for j in range(k)] for i in range(k)]
    upper = [[GaussianRational(1 if i == j else 0) for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(i):
            lower[i][j] = GaussianRational(
                sampling.random_rational(rng, 3, 2), sampling.random_rational(rng, 3, 2))
            upper[j][i] = GaussianRational(
                sampling.random_rational(rng, 3, 2), sampling.random_rational(rng, 3, 2))
    diag = Matrix.diagonal([
        GaussianRational(sampling.random_nonzero_rational(rng, 2, 2),
                         sampling.random_rational(rng, 2, 2))
        for _ in range(k)
    ])
    return Matrix(lower) @ Matrix(upper) @ diag


def _complex_solve(m: Matrix, rhs) -> tuple:
    """One particular solution of m x = rhs over Q(i)."""
    aug = m.hstack(Matrix.from_cols([rhs]))
    reduced, pivots = aug.rref()
    ncols = m.cols
    if any(c == ncols for c in pivots):
        raise ValueError("inconsistent complex linear system")
    x = [GaussianRational(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = gauss(reduced.entries[r][ncols])
    return tuple(x)
