"""Exception types shared across the package."""


class SymtransError(Exception):
    """Base class for all package-specific errors."""


class NonSquare(SymtransError):
    """A square-matrix operation was applied to a rectangular matrix."""


class DimensionMismatch(SymtransError):
    """Operands live in spaces of incompatible dimensions."""


class InvalidDimension(SymtransError):
    """A requested dimension is outside its allowed range."""


class NotIsotropic(SymtransError):
    """A subspace required to be isotropic is not."""


class SamplingExhausted(SymtransError):
    """A rejection sampler hit its retry bound."""


class NotSymplectic(SymtransError):
    """A matrix required to preserve the symplectic form does not."""


class IncompatibleJ(SymtransError):
    """A complex structure fails J^2 = -id or compatibility with omega."""


class NotInVariety(SymtransError):
    """A cubic form required to define an Abelian group does not."""


class NonConstantCubic(SymtransError):
    """An operation restricted to constant cubic forms got a non-constant one."""


class ParseError(SymtransError):
    """An input file does not conform to its format."""
