"""The symplectic vector space (V, omega) in a fixed Darboux basis.

The Gram matrix convention is the single source of truth for signs in
this package: omega(e_i, e_{n+i}) = 1 for i < n, all other basis pairs
vanish, so the Gram matrix is [[0, I], [-I, 0]] and omega^2 = -id.  Other
modules read omega from here instead of hard-coding signs.
"""

import random
from fractions import Fraction

from symtrans import sampling
from symtrans.errors import DimensionMismatch, InvalidDimension
from symtrans.linalg import Matrix, Subspace, unit_vec, vec


class SymplecticSpace:
    """R^{2n} with the standard Darboux symplectic form."""

    __slots__ = ("n", "dim", "omega", "omega_inv")

    def __init__(self, n: int):
        if n < 1:
            raise InvalidDimension("half-dimension must be >= 1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "dim", 2 * n)
        rows = []
        for i in range(2 * n):
            row = [0] * (2 * n)
            if i < n:
                row[n + i] = 1
            else:
                row[i - n] = -1
            rows.append(row)
        omega = Matrix(rows)
        object.__setattr__(self, "omega", omega)
        # Darboux normalization: omega^2 = -id, so omega^{-1} = -omega.
        object.__setattr__(self, "omega_inv", -omega)

    def __setattr__(self, name, value):
        raise AttributeError("SymplecticSpace is immutable")

    def __eq__(self, other):
        return isinstance(other, SymplecticSpace) and other.n == self.n

    def __hash__(self):
        return hash(("SymplecticSpace", self.n))

    def __repr__(self):
        return f"SymplecticSpace(n={self.n})"

    # -- evaluation -----------------------------------------------------

    def check_dim(self, v):
        if len(v) != self.dim:
            raise DimensionMismatch(
                f"vector of length {len(v)} in a {self.dim}-dimensional space")

    def omega_eval(self, x, y) -> Fraction:
        """omega(x, y) = x^T Omega y."""
        x, y = vec(x), vec(y)
        self.check_dim(x)
        self.check_dim(y)
        oy = self.omega.apply(y)
        return sum(a * b for a, b in zip(x, oy))

    def omega_dual(self, v) -> tuple:
        """The covector omega(v, .) as a coefficient tuple.

        omega(v, e_j) = (Omega^T v)_j, and Omega^T = Omega^{-1} in the
        Darboux normalization.
        """
        v = vec(v)
        self.check_dim(v)
        return self.omega_inv.apply(v)

    def omega_solve(self, covector) -> tuple:
        """The unique u with omega(u, e_k) = covector[k] for all k."""
        c = vec(covector)
        self.check_dim(c)
        # omega(u, e_k) = (u^T Omega)_k  =>  u = Omega^{-T} c = Omega c.
        return self.omega.apply(c)

    # -- isotropy ---------------------------------------------------------

    def is_isotropic(self, w: Subspace) -> bool:
        if w.ambient_dim != self.dim:
            raise DimensionMismatch("subspace has wrong ambient dimension")
        basis = w.basis_vectors()
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                if self.omega_eval(basis[i], basis[j]):
                    return False
        return True

    def is_lagrangian(self, w: Subspace) -> bool:
        return w.dim == self.n and self.is_isotropic(w)

    def is_symplectic_matrix(self, g: Matrix) -> bool:
        return (g.shape == (self.dim, self.dim)
                and g.transpose() @ self.omega @ g == self.omega)

    def check_compatible_j(self, j: Matrix) -> bool:
        """J^2 = -id and omega(J., J.) = omega."""
        if j.shape != (self.dim, self.dim):
            return False
        if j @ j != -Matrix.identity(self.dim):
            return False
        return j.transpose() @ self.omega @ j == self.omega

    # -- random generation ----------------------------------------------

    # generator parameters stay small: the entries of a generator product
    # compound multiplicatively, and downstream cubics cube them
    _GEN_NUM = 3
    _GEN_DEN = 2

    def _random_gl_block(self, rng) -> Matrix:
        """Random invertible n x n as L*U*D with unitriangular L, U."""
        n = self.n
        lower = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        upper = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i):
                lower[i][j] = sampling.random_rational(rng, self._GEN_NUM, self._GEN_DEN)
                upper[j][i] = sampling.random_rational(rng, self._GEN_NUM, self._GEN_DEN)
        diag = Matrix.diagonal(
            [sampling.random_nonzero_rational(rng, 2, 2) for _ in range(n)])
        return Matrix(lower) @ Matrix(upper) @ diag

    def _random_symmetric_block(self, rng) -> Matrix:
        n = self.n
        entries = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                entries[i][j] = entries[j][i] = sampling.random_rational(
                    rng, self._GEN_NUM, self._GEN_DEN)
        return Matrix(entries)

    def random_symplectic(self, seed) -> Matrix:
        """Exact random symplectic matrix as a product of elementary generators.

        Generators: GL(n) block embeddings diag(A, A^{-T}), symmetric
        shears in both triangles, and the Darboux swap.
        """
        rng = sampling.as_rng(seed)
        n = self.n
        zero = Matrix.zeros(n, n)
        eye = Matrix.identity(n)
        g = Matrix.identity(self.dim)
        for _ in range(rng.randint(2, 4)):
            kind = rng.randrange(4)
            if kind == 0:
                a = self._random_gl_block(rng)
                factor = Matrix.from_blocks([
                    [a, zero],
                    [zero, a.inverse().transpose()],
                ])
            elif kind == 1:
                b = self._random_symmetric_block(rng)
                factor = Matrix.from_blocks([[eye, b], [zero, eye]])
            elif kind == 2:
                c = self._random_symmetric_block(rng)
                factor = Matrix.from_blocks([[eye, zero], [c, eye]])
            else:
                factor = self.omega
            g = g @ factor
        return g

    def random_isotropic(self, k: int, seed) -> Subspace:
        """g . span{e_0..e_{k-1}} for a random symplectic g: exactly isotropic."""
        if not 0 <= k <= self.n:
            raise InvalidDimension(f"isotropic dimension {k} not in 0..{self.n}")
        if k == 0:
            return Subspace.zero(self.dim)
        g = self.random_symplectic(seed)
        return Subspace(self.dim, [g.col(j) for j in range(k)])

    def random_lagrangian(self, seed) -> Subspace:
        return self.random_isotropic(self.n, seed)

    # -- Darboux completion -----------------------------------------------

    def darboux_completion(self, w: Subspace) -> Matrix:
        """A symplectic matrix whose first w.dim columns span w.

        Columns are a full Darboux frame (f_1..f_n, g_1..g_n) with
        omega(f_i, g_j) = delta_ij, built by solving for dual vectors and
        correcting them to be mutually isotropic, then recursing on the
        omega-complement.  Exact; raises if w is not isotropic.
        """
        from symtrans.errors import NotIsotropic

        if not self.is_isotropic(w):
            raise NotIsotropic("cannot complete a non-isotropic subspace")
        f_vectors = list(w.basis_vectors())
        k = len(f_vectors)
        g_vectors = self._dual_isotropic(f_vectors)

        while len(f_vectors) < self.n:
            current = f_vectors + g_vectors
            if current:
                constraints = Matrix([self.omega_dual(v) for v in current])
                complement = constraints.kernel_basis()
            else:
                complement = [unit_vec(self.dim, i) for i in range(self.dim)]
            u = complement[0]
            partner = next(
                (c for c in complement[1:] if self.omega_eval(u, c)), None)
            if partner is None:
                raise AssertionError("omega degenerate on complement")
            scale = self.omega_eval(u, partner)
            partner = tuple(x / scale for x in partner)
            f_vectors.append(u)
            g_vectors.append(partner)

        frame = Matrix.from_cols(f_vectors + g_vectors)
        assert self.is_symplectic_matrix(frame)
        return frame

    def _dual_isotropic(self, f_vectors) -> list:
        """Vectors g_i with omega(f_j, g_i) = delta_ij, mutually isotropic."""
        k = len(f_vectors)
        if k == 0:
            return []
        rows = Matrix([self.omega_dual(f) for f in f_vectors])
        duals = []
        for i in range(k):
            rhs = unit_vec(k, i)
            duals.append(self._solve(rows, rhs))
        # correction g_i += sum_j lambda_{ij} f_j with lambda_{ij} = -omega(g_i, g_j)/2
        # kills omega(g_i, g_j) while fixing the pairing with the f's.
        corrected = []
        for i in range(k):
            v = list(duals[i])
            for j in range(k):
                lam = -self.omega_eval(duals[i], duals[j]) / 2
                v = [x + lam * y for x, y in zip(v, f_vectors[j])]
            corrected.append(tuple(v))
        return corrected

    @staticmethod
    def _solve(m: Matrix, rhs) -> tuple:
        """One particular solution of m x = rhs (free variables zero)."""
        aug = m.hstack(Matrix.from_cols([rhs]))
        reduced, pivots = aug.rref()
        n = m.cols
        if any(c == n for c in pivots):
            raise ValueError("inconsistent linear system")
        x = [Fraction(0)] * n
        for r, c in enumerate(pivots):
            x[c] = reduced.entries[r][n]
        return tuple(x)
