"""Abelian simply transitive affine groups built from in-variety cubics.

A cubic form in the commuting traceless cone determines the Lie algebra
embedding X -> (S_X, X); its contractions square to zero, so affine
exponentials, the group law, the orbit map and its inverse all have exact
closed forms.  The chart object parametrizes the group by V itself.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from symtrans import _kernels as kernels
from symtrans import sampling
from symtrans.cubic import CubicForm
from symtrans.errors import DimensionMismatch, NotInVariety
from symtrans.linalg import Matrix, Subspace, kernel, vec, vec_add, vec_scale


@dataclass(frozen=True)
class AffineMap:
    """An affine transformation v -> linear v + translation."""

    linear: Matrix
    translation: tuple

    @classmethod
    def identity(cls, dim: int) -> "AffineMap":
        return cls(Matrix.identity(dim), tuple(Fraction(0) for _ in range(dim)))

    def compose(self, other: "AffineMap") -> "AffineMap":
        """(A, t) . (B, s) = (AB, As + t)."""
        if self.linear.cols != other.linear.rows:
            raise DimensionMismatch("composing affine maps of different dimensions")
        return AffineMap(
            self.linear @ other.linear,
            vec_add(self.linear.apply(other.translation), self.translation),
        )

    def apply(self, v) -> tuple:
        return vec_add(self.linear.apply(vec(v)), self.translation)

    def conjugate_by(self, g: Matrix) -> "AffineMap":
        """(A, t) -> (g A g^{-1}, g t)."""
        return AffineMap(g @ self.linear @ g.inverse(), g.apply(self.translation))


@dataclass(frozen=True)
class TransitivityReport:
    """Outcome of sampling the orbit-map differentials."""

    samples: int
    passed: bool
    witness: tuple | None  # a point v where the differential is not unipotent


class GroupChart:
    """The Abelian affine group of a cubic form, in exponential coordinates.

    Elements are exp(X) for X in V; the linear parts id + S_X are exact
    because the in-variety condition forces (S_X)^2 = 0.
    """

    __slots__ = ("cubic", "_report")

    def __init__(self, cubic: CubicForm):
        object.__setattr__(self, "cubic", cubic)
        object.__setattr__(self, "_report", cubic.in_c_sp())

    def __setattr__(self, name, value):
        raise AttributeError("GroupChart is immutable")

    @property
    def space(self):
        return self.cubic.space

    @property
    def stratum(self):
        return self._report

    def _require_variety(self):
        if not self._report.in_variety:
            raise NotInVariety(
                "cubic form has a nonzero commutator or trace witness: "
                f"{self._report.commutator_witness or self._report.trace_witness}")

    # -- exponential and orbit map ----------------------------------------

    def exp_element(self, x) -> AffineMap:
        """Time-1 flow of the affine field v -> S_x v + x: (id + S_x, x + S_x x / 2)."""
        self._require_variety()
        x = vec(x)
        self.space.check_dim(x)
        sx = self.cubic.endo(x)
        linear = Matrix.identity(self.space.dim) + sx
        translation = vec_add(x, vec_scale(Fraction(1, 2), sx.apply(x)))
        return AffineMap(linear, translation)

    def orbit_map(self, x) -> tuple:
        """exp(x) applied to the origin: x + S_x x / 2."""
        self._require_variety()
        x = vec(x)
        self.space.check_dim(x)
        return vec_add(x, vec_scale(Fraction(1, 2), self.cubic.endo(x).apply(x)))

    def orbit_map_inverse(self, y) -> tuple:
        """Exact inverse y - S_y y / 2 (uses S_X S_Y = 0)."""
        self._require_variety()
        y = vec(y)
        self.space.check_dim(y)
        return vec_add(y, vec_scale(Fraction(-1, 2), self.cubic.endo(y).apply(y)))

    # -- verification -------------------------------------------------------

    def _differential_int(self, v):
        """(numerators, denominator) of the orbit-map differential at v."""
        v = vec(v)
        self.space.check_dim(v)
        scale, mats = self.cubic._endo_ints()
        dim = self.space.dim
        vden = 1
        for x in v:
            vden = lcm(vden, x.denominator)
        vints = [int(x * vden) for x in v]
        den = scale * vden
        entries = [[den if a == i else 0 for i in range(dim)] for a in range(dim)]
        for i in range(dim):
            mi = mats[i]
            for a in range(dim):
                entries[a][i] += sum(mi[a][j] * vints[j] for j in range(dim))
        return entries, den

    def transitivity_matrix(self, v) -> Matrix:
        """Columns e_i + S_{e_i} v: the differential of the orbit map at v."""
        entries, den = self._differential_int(v)
        return Matrix([[Fraction(x, den) for x in row] for row in entries])

    def verify_simply_transitive(self, samples: int, seed) -> TransitivityReport:
        """det(differential at v) = 1 exactly for sampled v (unipotence)."""
        rng = sampling.as_rng(seed)
        dim = self.space.dim
        for _ in range(samples):
            v = sampling.random_vector(rng, dim)
            entries, den = self._differential_int(v)
            if kernels.int_det(entries) != den ** dim:
                return TransitivityReport(samples=samples, passed=False, witness=v)
        return TransitivityReport(samples=samples, passed=True, witness=None)

    def translation_subgroup(self) -> Subspace:
        """Kernel of X -> S_X: the translations inside the group."""
        self._require_variety()
        scale, mats = self.cubic._endo_ints()
        dim = self.space.dim
        # stack all entry maps X -> (S_X)_{ab} = sum_i X_i (S_{e_i})_{ab}
        rows = []
        for a in range(dim):
            for b in range(dim):
                row = [mats[i][a][b] for i in range(dim)]
                if any(row):
                    rows.append(row)
        if not rows:
            return Subspace.full(dim)
        ker = kernel(Matrix(rows))
        k = self._report.k
        assert ker.dim == dim - k and k <= self.space.n
        return ker


# ---------------------------------------------------------------------------
# orthogonal-type sanity: the prolongation of so(V) is trivial
# ---------------------------------------------------------------------------

def orthogonal_prolongation_dim(gram: Matrix) -> int:
    """Dimension of {(M_i): M_i e_j = M_j e_i, gram M_i + M_i^T gram = 0}.

    This is the solution space whose vanishing makes the translation group
    the only Abelian simply transitive group preserving a symmetric form.
    """
    if not gram.is_square() or not gram.is_symmetric():
        raise ValueError("gram must be a square symmetric matrix")
    dim = gram.rows
    nvars = dim ** 3  # variables t[i][a][b] = (M_i)_{ab}

    def var(i, a, b):
        return (i * dim + a) * dim + b

    rows = []
    # symmetry of contractions: (M_i)_{a j} = (M_j)_{a i}
    for i in range(dim):
        for j in range(i + 1, dim):
            for a in range(dim):
                row = [0] * nvars
                row[var(i, a, j)] += 1
                row[var(j, a, i)] -= 1
                rows.append(row)
    # anti-self-adjointness: sum_c g_{ac} (M_i)_{cb} + g_{bc} (M_i)_{ca} = 0
    g_int, _ = gram._int_form()
    for i in range(dim):
        for a in range(dim):
            for b in range(a, dim):
                row = [0] * nvars
                for c in range(dim):
                    if g_int[a][c]:
                        row[var(i, c, b)] += g_int[a][c]
                    if g_int[b][c]:
                        row[var(i, c, a)] += g_int[b][c]
                rows.append(row)
    _, pivots = kernels.int_rref(rows)
    return nvars - len(pivots)
