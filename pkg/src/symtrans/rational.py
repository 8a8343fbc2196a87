"""Exact scalars: rationals and Gaussian rationals.

Plain rationals are stdlib ``fractions.Fraction`` (always reduced, positive
denominator).  ``GaussianRational`` adjoins the imaginary unit; it is the
coefficient field for holomorphic potentials and complex subspaces.  No
floating point enters here: the float view used by geodesic integration
lives behind :func:`to_float`.
"""

from fractions import Fraction

from symtrans.errors import ParseError

Rat = Fraction


def rat(value) -> Fraction:
    """Coerce an int, Fraction or 'p/q' string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rat(token: str) -> Fraction:
    """Parse 'p/q' (or 'p') into a Fraction, rejecting anything else."""
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational literal {token!r}") from exc
    if "." in token or "e" in token or "E" in token:
        raise ParseError(f"bad rational literal {token!r}")
    return value


def format_rat(x: Fraction) -> str:
    """Render as 'p/q', or 'p' when the denominator is 1."""
    return str(Fraction(x))


def to_float(x) -> float:
    """The single conversion barrier from exact scalars to floats."""
    if isinstance(x, GaussianRational):
        if x.im:
            raise ValueError(f"{x} has a nonzero imaginary part")
        return float(x.re)
    return float(x)


class GaussianRational:
    """An element re + im*i of Q(i), with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", rat(re) if not isinstance(re, Fraction) else re)
        object.__setattr__(self, "im", rat(im) if not isinstance(im, Fraction) else im)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """The field norm re^2 + im^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    # -- comparisons / misc -------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return format_rat(self.re)
        if not self.re:
            return f"{format_rat(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rat(self.re)}{sign}{format_rat(abs(self.im))}i"


I_UNIT = GaussianRational(0, 1)


def gauss(value) -> GaussianRational:
    """Coerce an int, Fraction or GaussianRational into Q(i)."""
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(rat(value))
