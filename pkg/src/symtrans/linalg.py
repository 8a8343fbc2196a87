"""Small dense exact linear algebra over Q and Q(i).

`Matrix` is immutable with Fraction or GaussianRational entries.  Rational
matrices route multiplication, echelon forms and determinants through the
integer kernels (denominators are cleared once per matrix); Gaussian
rational matrices use generic field elimination, which is plenty for the
few small complex solves this package needs.

`Subspace` is a column span with a canonical primitive-integer echelon
basis, so equality and hashing are structural.
"""

from fractions import Fraction
from math import gcd, lcm

from symtrans import _kernels as kernels
from symtrans.errors import DimensionMismatch, NonSquare
from symtrans.rational import GaussianRational, rat

Scalar = Fraction


def _coerce_entry(x):
    if isinstance(x, (Fraction, GaussianRational)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"bad matrix entry {x!r}")


# ---------------------------------------------------------------------------
# vectors (plain tuples of scalars)
# ---------------------------------------------------------------------------

def vec(values) -> tuple:
    return tuple(_coerce_entry(v) for v in values)


def vec_zero(n: int) -> tuple:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> tuple:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(x, y) -> tuple:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x, y) -> tuple:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x) -> tuple:
    return tuple(c * a for a in x)


def vec_is_zero(x) -> bool:
    return not any(x)


class Matrix:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("rows", "cols", "entries", "_int_cache")

    def __init__(self, rows):
        entries = tuple(tuple(_coerce_entry(x) for x in row) for row in rows)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise ValueError("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_int_cache", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values) -> "Matrix":
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, columns, rows: int | None = None) -> "Matrix":
        columns = [tuple(c) for c in columns]
        if not columns:
            if rows is None:
                raise ValueError("empty column list needs an explicit row count")
            return cls.zeros(rows, 0)
        return cls(list(zip(*columns)))

    @classmethod
    def from_blocks(cls, blocks) -> "Matrix":
        """Assemble from a 2D grid of matrices."""
        rows = []
        for brow in blocks:
            height = brow[0].rows
            for i in range(height):
                rows.append([x for b in brow for x in b.entries[i]])
        return cls(rows)

    # -- basic access -----------------------------------------------------

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list:
        return [self.col(j) for j in range(self.cols)]

    def is_rational(self) -> bool:
        return all(isinstance(x, Fraction) for row in self.entries for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i)
        )

    def is_antisymmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.rows) for j in range(i + 1)
        )

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix([
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.entries, other.entries)
        ])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix([
            [a - b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.entries, other.entries)
        ])

    def __neg__(self):
        return Matrix([[-x for x in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Matrix([[x * other for x in row] for row in self.entries])
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        if self.cols == 0:
            return Matrix.zeros(self.rows, other.cols)
        a, da = self._int_form()
        if a is not None:
            b, db = other._int_form()
            if b is not None:
                prod = kernels.int_matmul(a, b)
                den = da * db
                return Matrix([[Fraction(x, den) for x in row] for row in prod])
        bt = list(zip(*other.entries))
        return Matrix([
            [sum(x * y for x, y in zip(row, colv)) for colv in bt]
            for row in self.entries
        ])

    def apply(self, v) -> tuple:
        """Matrix-vector product, returning a tuple."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"{self.shape} applied to length {len(v)}")
        return tuple(sum(x * y for x, y in zip(row, v)) for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.entries))) if self.rows else Matrix.zeros(self.cols, 0)

    def conjugate(self) -> "Matrix":
        return Matrix([
            [x.conjugate() if isinstance(x, GaussianRational) else x for x in row]
            for row in self.entries
        ])

    def trace(self):
        if not self.is_square():
            raise NonSquare(f"trace of {self.shape}")
        return sum(self.entries[i][i] for i in range(self.rows))

    # -- integer form -------------------------------------------------------

    def _int_form(self):
        """(integer rows, common denominator) for rational matrices, else (None, None)."""
        cached = self._int_cache
        if cached is not None:
            return cached
        den = 1
        for row in self.entries:
            for x in row:
                if not isinstance(x, Fraction):
                    object.__setattr__(self, "_int_cache", (None, None))
                    return (None, None)
                den = lcm(den, x.denominator)
        ints = [[int(x * den) for x in row] for row in self.entries]
        object.__setattr__(self, "_int_cache", (ints, den))
        return (ints, den)

    # -- elimination ----------------------------------------------------

    def rref(self):
        """Reduced row echelon form.  Returns (Matrix, pivot column tuple)."""
        if self.rows == 0 or self.cols == 0:
            return self, ()
        ints, _ = self._int_form()
        if ints is not None:
            reduced, pivots = kernels.int_rref(ints)
            out = []
            for idx, c in enumerate(pivots):
                pv = reduced[idx][c]
                out.append([Fraction(x, pv) for x in reduced[idx]])
            for idx in range(len(pivots), self.rows):
                out.append([Fraction(0)] * self.cols)
            return Matrix(out), tuple(pivots)
        return self._generic_rref()

    def _generic_rref(self):
        m = [list(row) for row in self.entries]
        nrows, ncols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(ncols):
            pr = next((i for i in range(r, nrows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            m[r] = [x / pv for x in m[r]]
            for i in range(nrows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return Matrix(m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list:
        """Basis vectors (tuples) of the right null space."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for r, c in enumerate(pivots):
                v[c] = -reduced.entries[r][f]
            basis.append(tuple(v))
        return basis

    def det(self):
        """Exact determinant via fraction-free elimination."""
        if not self.is_square():
            raise NonSquare(f"determinant of {self.shape}")
        if self.rows == 0:
            return Fraction(1)
        ints, den = self._int_form()
        if ints is not None:
            d = kernels.int_det(ints)
            return Fraction(d, den ** self.rows)
        return self._generic_det()

    def _generic_det(self):
        n = self.rows
        m = [list(row) for row in self.entries]
        det = GaussianRational(1)
        for c in range(n):
            pr = next((i for i in range(c, n) if m[i][c]), None)
            if pr is None:
                return GaussianRational(0)
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                det = -det
            pv = m[c][c]
            det = det * pv
            m[c] = [x / pv for x in m[c]]
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return det

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise NonSquare(f"inverse of {self.shape}")
        n = self.rows
        aug = Matrix([list(row) + [1 if i == j else 0 for j in range(n)]
                      for i, row in enumerate(self.entries)])
        reduced, pivots = aug.rref()
        if tuple(pivots) != tuple(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix([row[n:] for row in reduced.entries])

    # -- misc -------------------------------------------------------------

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise DimensionMismatch(f"hstack {self.shape} with {other.shape}")
        return Matrix([list(r1) + list(r2) for r1, r2 in zip(self.entries, other.entries)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A rational subspace of Q^n stored via a canonical echelon basis.

    The canonical form is the primitive-integer RREF of the spanning
    vectors laid out as rows, so two values are equal iff the spans
    coincide.
    """

    __slots__ = ("ambient_dim", "_canon", "_pivots")

    def __init__(self, ambient_dim: int, spanning_vectors):
        vectors = [vec(v) for v in spanning_vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        if vectors:
            den = 1
            for v in vectors:
                for x in v:
                    den = lcm(den, x.denominator)
            int_rows = [[int(x * den) for x in v] for v in vectors]
            reduced, pivots = kernels.int_rref(int_rows)
            canon = tuple(tuple(row) for row in reduced[: len(pivots)])
        else:
            canon, pivots = (), []
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "_canon", canon)
        object.__setattr__(self, "_pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [unit_vec(ambient_dim, i) for i in range(ambient_dim)])

    @classmethod
    def from_basis(cls, basis: Matrix) -> "Subspace":
        """Build from a matrix whose columns are required to be independent."""
        sub = cls(basis.rows, basis.columns())
        if sub.dim != basis.cols:
            raise ValueError("basis columns are dependent")
        return sub

    @property
    def dim(self) -> int:
        return len(self._canon)

    @property
    def basis(self) -> Matrix:
        """Canonical basis as matrix columns (primitive integer vectors)."""
        if not self._canon:
            return Matrix.zeros(self.ambient_dim, 0)
        return Matrix.from_cols([tuple(Fraction(x) for x in row) for row in self._canon])

    def basis_vectors(self) -> list:
        return self.basis.columns()

    def contains(self, v) -> bool:
        v = vec(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector has wrong ambient dimension")
        if vec_is_zero(v):
            return True
        enlarged = Subspace(self.ambient_dim, list(self.basis_vectors()) + [v])
        return enlarged.dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return (self + other).dim == self.dim

    def same_span(self, other: "Subspace") -> bool:
        """Equality test via rank of the concatenated spanning sets."""
        if self.ambient_dim != other.ambient_dim:
            return False
        joint = Subspace(self.ambient_dim,
                         list(self.basis_vectors()) + list(other.basis_vectors()))
        return joint.dim == self.dim == other.dim

    def transform(self, g: Matrix) -> "Subspace":
        """Image of the subspace under the linear map g."""
        return Subspace(g.rows, [g.apply(v) for v in self.basis_vectors()])

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspace sum across ambient dimensions")
        return Subspace(self.ambient_dim,
                        list(self.basis_vectors()) + list(other.basis_vectors()))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._canon == other._canon

    def __hash__(self):
        return hash((self.ambient_dim, self._canon))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"


def kernel(m: Matrix) -> Subspace:
    """The subspace {x : m x = 0}."""
    return Subspace(m.cols, m.kernel_basis())


def column_space(m: Matrix) -> Subspace:
    return Subspace(m.rows, m.columns())
