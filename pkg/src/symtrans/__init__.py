"""Exact workbench for Abelian simply transitive symplectic affine groups
and the flat special Kahler structures built from cubic forms.

Algebraic identities are verified in exact rational (and Gaussian
rational) arithmetic; floating point appears only in the geodesic
integrator.  Hot kernels run compiled when the Cython extension is
available and fall back to pure Python otherwise (see
``symtrans.kernel_backend``).
"""

from symtrans._kernels import BACKEND as _BACKEND
from symtrans.affine import AffineMap, GroupChart, TransitivityReport
from symtrans.cubic import (
    CubicForm,
    EndoFamily,
    StratumReport,
    act,
    cubic_on_subspace,
    endo_family,
    extend_gl_to_sp,
    in_c_j,
    in_c_sp,
    sample_nonisotropic,
    sample_regular,
    support,
)
from symtrans.hermitian import HermitianSpace
from symtrans.kahler import (
    FlatnessReport,
    HoloPotential,
    SKStructure,
    complex_support_dim,
    realize_s,
    third_derivative_tensor,
)
from symtrans.linalg import Matrix, Subspace, kernel
from symtrans.poly import Poly
from symtrans.rational import GaussianRational, Rat
from symtrans.symplectic import SymplecticSpace

__version__ = "0.1.0"


def kernel_backend() -> str:
    """'compiled' when the Cython kernels are active, else 'pure'."""
    return _BACKEND


__all__ = [
    "AffineMap",
    "CubicForm",
    "EndoFamily",
    "FlatnessReport",
    "GaussianRational",
    "GroupChart",
    "HermitianSpace",
    "HoloPotential",
    "Matrix",
    "Poly",
    "Rat",
    "SKStructure",
    "StratumReport",
    "Subspace",
    "SymplecticSpace",
    "TransitivityReport",
    "act",
    "complex_support_dim",
    "cubic_on_subspace",
    "endo_family",
    "extend_gl_to_sp",
    "in_c_j",
    "in_c_sp",
    "kernel",
    "kernel_backend",
    "realize_s",
    "sample_nonisotropic",
    "sample_regular",
    "support",
    "third_derivative_tensor",
]
