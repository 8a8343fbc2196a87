"""Cubic symmetric tensors on a symplectic space and the induced
endomorphism families.

A cubic form sigma is stored sparsely on sorted index triples, so total
symmetry is structural.  The contracted endomorphisms S_X are recovered
through the symplectic form: S_XY is the unique vector with
omega(S_XY, Z) = sigma(X, Y, Z).  Membership in the commuting traceless
cone and its complex refinement, the support stratification, the group
actions and the regular samplers all live here.

Hot paths (commutators, support ranks, pullbacks) run on denominator-
cleared integer data through the kernel backend; the public surface stays
in exact Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import lcm

from symtrans import _kernels as kernels
from symtrans import sampling
from symtrans.errors import (
    IncompatibleJ,
    NotIsotropic,
    NotSymplectic,
    SamplingExhausted,
)
from symtrans.linalg import Matrix, Subspace, unit_vec, vec
from symtrans.symplectic import SymplecticSpace

SAMPLE_RETRIES = 32


def sorted_triple(i: int, j: int, k: int) -> tuple:
    return tuple(sorted((i, j, k)))


class CubicForm:
    """A totally symmetric trilinear form on a symplectic space."""

    __slots__ = ("space", "coeffs", "_cache")

    def __init__(self, space: SymplecticSpace, coeffs):
        clean = {}
        for (i, j, k), value in coeffs.items():
            if not 0 <= i <= j <= k < space.dim:
                raise ValueError(f"triple {(i, j, k)} not sorted in range")
            value = value if isinstance(value, Fraction) else Fraction(value)
            if value:
                clean[(i, j, k)] = value
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("CubicForm is immutable")

    @classmethod
    def zero(cls, space: SymplecticSpace) -> "CubicForm":
        return cls(space, {})

    def coefficient(self, i: int, j: int, k: int) -> Fraction:
        return self.coeffs.get(sorted_triple(i, j, k), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, CubicForm):
            return NotImplemented
        return self.space == other.space and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.space, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"CubicForm(n={self.space.n}, {len(self.coeffs)} terms)"

    # -- evaluation -------------------------------------------------------

    def sigma(self, x, y, z) -> Fraction:
        """Trilinear evaluation sigma(x, y, z)."""
        x, y, z = vec(x), vec(y), vec(z)
        for v in (x, y, z):
            self.space.check_dim(v)
        total = Fraction(0)
        for (i, j, k), c in self.coeffs.items():
            s = sum(x[a] * y[b] * z[d] for a, b, d in set(permutations((i, j, k))))
            total += c * s
        return total

    # -- integer form -------------------------------------------------------

    def _int_coeffs(self):
        """(scale, {triple: int}) with scale * sigma integer."""
        cached = self._cache.get("int")
        if cached is None:
            scale = 1
            for v in self.coeffs.values():
                scale = lcm(scale, v.denominator)
            cached = (scale, {t: int(v * scale) for t, v in self.coeffs.items()})
            self._cache["int"] = cached
        return cached

    def _endo_ints(self):
        """(scale, [scale * S_{e_i} as integer rows for each basis i])."""
        cached = self._cache.get("endo")
        if cached is None:
            scale, ic = self._int_coeffs()
            dim = self.space.dim
            omega_int = self.space.omega._int_form()[0]
            mats = []
            for i in range(dim):
                # column j of contraction_i is the covector sigma(e_i, e_j, .)
                contraction = [[0] * dim for _ in range(dim)]
                for k in range(dim):
                    row = contraction[k]
                    for j in range(dim):
                        row[j] = ic.get(sorted_triple(i, j, k), 0)
                # S_{e_i} column j solves omega(v, e_k) = sigma(i, j, k): v = Omega c.
                mats.append(kernels.int_matmul(omega_int, contraction))
            cached = (scale, mats)
            self._cache["endo"] = cached
        return cached

    # -- contracted endomorphisms -----------------------------------------

    def endo_matrices(self) -> list:
        """The matrices S_{e_i} with exact rational entries."""
        scale, mats = self._endo_ints()
        return [
            Matrix([[Fraction(x, scale) for x in row] for row in m])
            for m in mats
        ]

    def endo(self, x) -> Matrix:
        """S_x for an arbitrary vector x, by linearity."""
        x = vec(x)
        self.space.check_dim(x)
        scale, mats = self._endo_ints()
        dim = self.space.dim
        acc = [[Fraction(0)] * dim for _ in range(dim)]
        for i, xi in enumerate(x):
            if not xi:
                continue
            mi = mats[i]
            for a in range(dim):
                row = mi[a]
                arow = acc[a]
                for b in range(dim):
                    if row[b]:
                        arow[b] += xi * row[b]
        return Matrix(acc) * Fraction(1, scale)

    def mul_vec(self, x, y) -> tuple:
        """The commutative product x o y := S_x y."""
        return self.endo(x).apply(vec(y))

    # -- support and variety membership -------------------------------------

    def support(self) -> Subspace:
        """span{S_XY} = span of the basis contractions S_{e_i} e_j."""
        cached = self._cache.get("support")
        if cached is None:
            scale, mats = self._endo_ints()
            dim = self.space.dim
            vectors = []
            for i in range(dim):
                for j in range(i, dim):
                    col = tuple(mats[i][a][j] for a in range(dim))
                    if any(col):
                        vectors.append(col)
            cached = Subspace(dim, vectors)
            self._cache["support"] = cached
        return cached

    def commutator_witness(self):
        """A basis pair (i, j) with [S_{e_i}, S_{e_j}] != 0, or None."""
        _, mats = self._endo_ints()
        dim = self.space.dim
        for i in range(dim):
            for j in range(i + 1, dim):
                if not kernels.int_commutator_is_zero(mats[i], mats[j]):
                    return (i, j)
        return None

    def trace_witness(self):
        """A basis index i with tr S_{e_i} != 0, or None."""
        _, mats = self._endo_ints()
        for i, m in enumerate(mats):
            if sum(m[a][a] for a in range(len(m))):
                return i
        return None

    def products_vanish(self) -> bool:
        """S_{e_i} S_{e_j} = 0 for all basis pairs (nilpotency chain)."""
        _, mats = self._endo_ints()
        dim = self.space.dim
        for i in range(dim):
            for j in range(i, dim):
                if not kernels.int_product_is_zero(mats[i], mats[j]):
                    return False
        return True

    def in_c_sp(self) -> "StratumReport":
        """Membership in the commuting traceless cone, with stratum data."""
        cached = self._cache.get("stratum")
        if cached is not None:
            return cached
        cw = self.commutator_witness()
        tw = self.trace_witness()
        supp = self.support()
        k = supp.dim
        isotropic = self.space.is_isotropic(supp)
        in_variety = cw is None and tw is None
        report = StratumReport(
            support=supp,
            k=k,
            isotropic=isotropic,
            in_variety=in_variety,
            translation_dim=self.space.dim - k if in_variety else None,
            commutator_witness=cw,
            trace_witness=tw,
        )
        self._cache["stratum"] = report
        return report

    def in_c_j(self, j_matrix: Matrix) -> bool:
        """Membership in the complex refinement of the cone.

        Requires J^2 = -id compatible with omega.  True iff every S_{e_i}
        anticommutes with J and the commuting traceless conditions hold;
        the implied isotropy and J-invariance of the support are asserted.
        """
        if not self.space.check_compatible_j(j_matrix):
            raise IncompatibleJ("J fails J^2 = -id or omega compatibility")
        if not self.anticommutes_with(j_matrix):
            return False
        if not self.in_c_sp().in_variety:
            return False
        supp = self.support()
        assert self.space.is_isotropic(supp), "support of a C_J form must be isotropic"
        assert supp.transform(j_matrix) == supp, "support of a C_J form must be J-invariant"
        return True

    def anticommutes_with(self, j_matrix: Matrix) -> bool:
        """S_{e_i} J + J S_{e_i} = 0 for every basis index i."""
        scale, mats = self._endo_ints()
        j_int, _ = j_matrix._int_form()
        if j_int is None:
            raise IncompatibleJ("J must have rational entries")
        for m in mats:
            left = kernels.int_matmul(m, j_int)
            right = kernels.int_matmul(j_int, m)
            if any(x + y for lr, rr in zip(left, right) for x, y in zip(lr, rr)):
                return False
        return True


@dataclass(frozen=True)
class EndoFamily:
    """The basis contractions mats[i] = S_{e_i} of a cubic form."""

    space: SymplecticSpace
    mats: tuple

    def __getitem__(self, i: int) -> Matrix:
        return self.mats[i]


@dataclass(frozen=True)
class StratumReport:
    """Stratum data of a cubic form: support, its dimension and isotropy,
    cone membership, and the translation dimension 2n - k when inside."""

    support: Subspace
    k: int
    isotropic: bool
    in_variety: bool
    translation_dim: int | None
    commutator_witness: tuple | None
    trace_witness: int | None


def endo_family(s: CubicForm) -> EndoFamily:
    return EndoFamily(space=s.space, mats=tuple(s.endo_matrices()))


def support(s: CubicForm) -> Subspace:
    return s.support()


def in_c_sp(s: CubicForm) -> StratumReport:
    return s.in_c_sp()


def in_c_j(s: CubicForm, j_matrix: Matrix) -> bool:
    return s.in_c_j(j_matrix)


# ---------------------------------------------------------------------------
# group action
# ---------------------------------------------------------------------------

def act(g: Matrix, s: CubicForm) -> CubicForm:
    """The action (g.S)_X = g S_{g^{-1}X} g^{-1} of a symplectic matrix.

    Equivalently sigma'(X, Y, Z) = sigma(g^{-1}X, g^{-1}Y, g^{-1}Z).
    """
    space = s.space
    if not space.is_symplectic_matrix(g):
        raise NotSymplectic("the cubic action is defined for symplectic matrices")
    h = g.inverse()
    scale, mats = s._endo_ints()
    dim = space.dim
    base = [Matrix([[Fraction(x, scale) for x in row] for row in m]) for m in mats]
    coeffs = {}
    for i in range(dim):
        combo = Matrix.zeros(dim, dim)
        for a in range(dim):
            ha = h[a, i]
            if ha:
                combo = combo + base[a] * ha
        conj = g @ combo @ h
        for j in range(i, dim):
            dual = space.omega_dual(conj.col(j))
            for k in range(j, dim):
                if dual[k]:
                    coeffs[(i, j, k)] = dual[k]
    return CubicForm(space, coeffs)


# ---------------------------------------------------------------------------
# construction on a subspace and sampling
# ---------------------------------------------------------------------------

def cubic_on_subspace(space: SymplecticSpace, basis: Matrix, coeffs) -> CubicForm:
    """The cubic form sum T_abc * sym(r_a r_b r_c) with r_a = omega(w_a, .).

    ``basis`` holds the w_a as columns; ``coeffs`` maps sorted triples over
    the column indices to scalars.  The support is always contained in the
    column span, with equality generically.
    """
    k = basis.cols
    dim = space.dim
    if basis.rows != dim:
        raise ValueError("basis has wrong ambient dimension")
    if k == 0 or not coeffs:
        return CubicForm.zero(space)

    basis_int, bden = basis._int_form()
    tden = 1
    tvals = {}
    for t, v in coeffs.items():
        v = v if isinstance(v, Fraction) else Fraction(v)
        if v:
            tvals[t] = v
            tden = lcm(tden, v.denominator)
    if not tvals:
        return CubicForm.zero(space)

    omega_inv_int = space.omega_inv._int_form()[0]
    cols = [[basis_int[r][c] for r in range(dim)] for c in range(k)]
    rvecs = [kernels.int_matmul(omega_inv_int, [[x] for x in col]) for col in cols]
    r_rows = [[rv[a][0] for a in range(dim)] for rv in rvecs]

    # dense symmetrized coefficients, then three contractions (as matmuls)
    dense = [[[0] * k for _ in range(k)] for _ in range(k)]
    for (a, b, c), v in tvals.items():
        iv = int(v * tden)
        for p, q, r in set(permutations((a, b, c))):
            dense[p][q][r] = iv

    t1 = [[dense[a][b][c] for a in range(k)] for b in range(k) for c in range(k)]
    step1 = kernels.int_matmul(t1, r_rows)           # rows (b,c) -> length dim
    a2 = [[step1[b * k + c][i] for b in range(k)] for c in range(k) for i in range(dim)]
    step2 = kernels.int_matmul(a2, r_rows)           # rows (c,i) -> length dim
    b2 = [[step2[c * dim + i][j] for c in range(k)] for i in range(dim) for j in range(dim)]
    step3 = kernels.int_matmul(b2, r_rows)           # rows (i,j) -> length dim

    den = tden * bden ** 3
    out = {}
    for i in range(dim):
        for j in range(i, dim):
            row = step3[i * dim + j]
            for kk in range(j, dim):
                if row[kk]:
                    out[(i, j, kk)] = Fraction(row[kk], den)
    return CubicForm(space, out)


def sample_regular(space: SymplecticSpace, w: Subspace, seed) -> CubicForm:
    """A random cubic supported exactly on the isotropic subspace w.

    Coefficients are drawn on the omega-dual directions of w; regularity
    (support equal to w, not a proper subspace) is a dense condition, so a
    bounded number of redraws suffices.
    """
    if not space.is_isotropic(w):
        raise NotIsotropic("regular cubics are sampled on isotropic subspaces")
    if w.dim == 0:
        return CubicForm.zero(space)
    rng = sampling.as_rng(seed)
    basis = w.basis
    k = w.dim
    triples = [(a, b, c) for a in range(k) for b in range(a, k) for c in range(b, k)]
    for _ in range(SAMPLE_RETRIES):
        coeffs = {t: Fraction(sampling.random_int(rng)) for t in triples}
        form = cubic_on_subspace(space, basis, coeffs)
        if form.support() == w:
            return form
    raise SamplingExhausted(f"no regular cubic on a dim-{k} subspace after {SAMPLE_RETRIES} tries")


def sample_nonisotropic(space: SymplecticSpace, seed) -> CubicForm:
    """A random cubic whose support is not isotropic (for converse tests)."""
    rng = sampling.as_rng(seed)
    dim = space.dim
    triples = [(i, j, k) for i in range(dim) for j in range(i, dim) for k in range(j, dim)]
    for _ in range(SAMPLE_RETRIES):
        coeffs = {t: Fraction(sampling.random_int(rng, 5)) for t in triples}
        form = CubicForm(space, coeffs)
        if form.is_zero():
            continue
        if not space.is_isotropic(form.support()):
            return form
    raise SamplingExhausted("could not sample a non-isotropic-support cubic")


# ---------------------------------------------------------------------------
# extension of GL(W) to Sp(V)
# ---------------------------------------------------------------------------

def extend_gl_to_sp(space: SymplecticSpace, w: Subspace, h: Matrix) -> Matrix:
    """A symplectic matrix acting as h on the isotropic subspace w.

    h is given in the canonical basis of w.  The construction completes w
    to a Darboux frame, acts by diag(h + id, (h + id)^{-T}) there, and
    conjugates back; the result preserves w and restricts to h.
    """
    k = w.dim
    if h.shape != (k, k):
        raise ValueError(f"h must be {k}x{k}")
    if not h.det():
        raise ValueError("h must be invertible")
    frame = space.darboux_completion(w)
    n = space.n
    blocks = Matrix.identity(n).entries
    a = [[h[i, j] if i < k and j < k else blocks[i][j] for j in range(n)]
         for i in range(n)]
    a = Matrix(a)
    zero = Matrix.zeros(n, n)
    middle = Matrix.from_blocks([[a, zero], [zero, a.inverse().transpose()]])
    g = frame @ middle @ frame.inverse()
    assert space.is_symplectic_matrix(g)
    return g
