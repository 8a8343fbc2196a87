"""Sparse multivariate polynomials with Gaussian-rational coefficients.

Exponent tuples map to coefficients; differentiation, evaluation and
linear substitution are exact.  Degrees stay tiny here (holomorphic
potentials of degree <= 4 and their realifications), so no attempt is
made at asymptotic cleverness.
"""

from fractions import Fraction

from symtrans.rational import GaussianRational, gauss


class Poly:
    """A polynomial in ``nvars`` variables over Q(i)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps}")
                coeff = gauss(coeff)
                if coeff:
                    clean[exps] = clean.get(exps, GaussianRational(0)) + coeff
                    if not clean[exps]:
                        del clean[exps]
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: gauss(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Poly":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {exps: GaussianRational(1)})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, GaussianRational(0)) + c
        return Poly(self.nvars, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = gauss(other)
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, GaussianRational(0)) + c1 * c2
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Poly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("mixing polynomials in different variable counts")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Poly.constant(self.nvars, other)
        return None

    # -- calculus -----------------------------------------------------------

    def partial(self, i: int) -> "Poly":
        """Exact partial derivative in variable i."""
        terms = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e:
                new = list(exps)
                new[i] = e - 1
                terms[tuple(new)] = coeff * e
        return Poly(self.nvars, terms)

    def evaluate(self, point) -> GaussianRational:
        point = [gauss(p) for p in point]
        if len(point) != self.nvars:
            raise ValueError("point has wrong arity")
        total = GaussianRational(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for x, e in zip(point, exps):
                for _ in range(e):
                    term = term * x
            total = total + term
        return total

    def substitute(self, images) -> "Poly":
        """Replace variable i by images[i] (all in a common variable count)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        nv = images[0].nvars
        out = Poly.zero(nv)
        for exps, coeff in self.terms.items():
            term = Poly.constant(nv, coeff)
            for img, e in zip(images, exps):
                if e:
                    term = term * img ** e
            out = out + term
        return out

    # -- structure ------------------------------------------------------------

    def total_degree(self) -> int:
        """Max total degree of the terms; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def real_part_coefficients(self) -> "Poly":
        """Keep Re of every coefficient (the real part at real points)."""
        return Poly(self.nvars, {e: GaussianRational(c.re) for e, c in self.terms.items()})

    def conjugate_coefficients(self) -> "Poly":
        return Poly(self.nvars, {e: c.conjugate() for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            mono = "*".join(
                f"z{i}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps) if e
            ) or "1"
            bits.append(f"({self.terms[exps]})*{mono}")
        return "Poly(" + " + ".join(bits) + ")"
