"""Text file formats and serialization helpers.

Cubic form files:
    cubicform v1 dim=<2n>
    i j k p/q        (one line per coefficient, sorted triples i <= j <= k)

Potential files:
    potential v1 n=<n> p=<p> q=<q>
    a1 a2 ... an re im    (exponent vector, then Gaussian-rational coefficient)

Writers emit canonical sorted order; readers reject malformed headers,
unsorted or duplicate keys, and non-rational literals.  Subspaces
serialize as a list of rational column vectors.
"""

from fractions import Fraction

from symtrans.cubic import CubicForm
from symtrans.errors import ParseError
from symtrans.hermitian import HermitianSpace
from symtrans.kahler import HoloPotential
from symtrans.linalg import Subspace
from symtrans.poly import Poly
from symtrans.rational import GaussianRational, format_rat, parse_rat
from symtrans.symplectic import SymplecticSpace

CUBIC_HEADER = "cubicform v1"
POTENTIAL_HEADER = "potential v1"


# ---------------------------------------------------------------------------
# cubic form files
# ---------------------------------------------------------------------------

def format_cubic(form: CubicForm) -> str:
    lines = [f"{CUBIC_HEADER} dim={form.space.dim}"]
    for (i, j, k) in sorted(form.coeffs):
        lines.append(f"{i} {j} {k} {format_rat(form.coeffs[(i, j, k)])}")
    return "\n".join(lines) + "\n"


def parse_cubic(text: str) -> CubicForm:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty cubic form file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "cubicform" or header[1] != "v1":
        raise ParseError(f"bad header {lines[0]!r}")
    if not header[2].startswith("dim="):
        raise ParseError(f"bad header field {header[2]!r}")
    try:
        dim = int(header[2][4:])
    except ValueError as exc:
        raise ParseError(f"bad dimension in {header[2]!r}") from exc
    if dim < 2 or dim % 2:
        raise ParseError(f"dimension must be even and positive, got {dim}")
    space = SymplecticSpace(dim // 2)
    coeffs = {}
    previous = None
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 4:
            raise ParseError(f"bad coefficient line {ln!r}")
        try:
            i, j, k = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ParseError(f"bad indices in {ln!r}") from exc
        if not 0 <= i <= j <= k < dim:
            raise ParseError(f"triple {(i, j, k)} not sorted within 0..{dim - 1}")
        if (i, j, k) in coeffs:
            raise ParseError(f"duplicate triple {(i, j, k)}")
        if previous is not None and (i, j, k) <= previous:
            raise ParseError(f"triples out of order at {(i, j, k)}")
        previous = (i, j, k)
        coeffs[(i, j, k)] = parse_rat(parts[3])
    return CubicForm(space, coeffs)


def write_cubic(path, form: CubicForm) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_cubic(form))


def read_cubic(path) -> CubicForm:
    with open(path, encoding="ascii") as fh:
        return parse_cubic(fh.read())


# ---------------------------------------------------------------------------
# potential files
# ---------------------------------------------------------------------------

def format_potential(potential: HoloPotential) -> str:
    space = potential.space
    lines = [f"{POTENTIAL_HEADER} n={space.n} p={space.p} q={space.q}"]
    for exps in sorted(potential.poly.terms):
        coeff = potential.poly.terms[exps]
        exp_str = " ".join(str(e) for e in exps)
        lines.append(f"{exp_str} {format_rat(coeff.re)} {format_rat(coeff.im)}")
    return "\n".join(lines) + "\n"


def parse_potential(text: str) -> HoloPotential:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty potential file")
    header = lines[0].split()
    if len(header) != 5 or header[0] != "potential" or header[1] != "v1":
        raise ParseError(f"bad header {lines[0]!r}")
    fields = {}
    for token in header[2:]:
        if "=" not in token:
            raise ParseError(f"bad header field {token!r}")
        key, _, value = token.partition("=")
        try:
            fields[key] = int(value)
        except ValueError as exc:
            raise ParseError(f"bad header field {token!r}") from exc
    if set(fields) != {"n", "p", "q"}:
        raise ParseError(f"header must carry n, p and q, got {lines[0]!r}")
    n, p, q = fields["n"], fields["p"], fields["q"]
    if p + q != n or p < 0 or q < 0 or n < 1:
        raise ParseError(f"inconsistent signature n={n} p={p} q={q}")
    space = HermitianSpace(p, q)
    terms = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n + 2:
            raise ParseError(f"expected {n} exponents and 2 rationals: {ln!r}")
        try:
            exps = tuple(int(x) for x in parts[:n])
        except ValueError as exc:
            raise ParseError(f"bad exponents in {ln!r}") from exc
        if any(e < 0 for e in exps):
            raise ParseError(f"negative exponent in {ln!r}")
        if exps in terms:
            raise ParseError(f"duplicate exponent vector {exps}")
        terms[exps] = GaussianRational(parse_rat(parts[n]), parse_rat(parts[n + 1]))
    return HoloPotential(space, Poly(n, terms))


def write_potential(path, potential: HoloPotential) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_potential(potential))


def read_potential(path) -> HoloPotential:
    with open(path, encoding="ascii") as fh:
        return parse_potential(fh.read())


# ---------------------------------------------------------------------------
# subspace / vector serialization
# ---------------------------------------------------------------------------

def subspace_to_columns(sub: Subspace) -> list:
    return [[format_rat(x) for x in col] for col in sub.basis_vectors()]


def vector_to_strings(v) -> list:
    return [format_rat(Fraction(x)) for x in v]


def parse_vector(text: str, dim: int) -> tuple:
    parts = text.replace(",", " ").split()
    if len(parts) != dim:
        raise ParseError(f"expected {dim} components, got {len(parts)}")
    return tuple(parse_rat(p) for p in parts)
