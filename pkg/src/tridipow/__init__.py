"""Closed-form spectra and integer powers of two complex tridiagonal families."""

from .numkit import (
    DimensionMismatchError,
    SingularMatrixError,
    TridiagonalMatrix,
    mat_inverse,
    mat_mul,
    mat_pow_oracle,
    max_abs_diff,
    tridiag_det,
)
from .chebyshev import ChebDegree, cheb_T, cheb_U, delta_poly
from .specmat import Family, FamilySpec, SpectralData, build, eigen_residual, eigenvalues, eigenvector
from .powers import Method, PowerRequest, PowerResult, modal_inverse, modal_matrix, power, power_closed, spectral_data
from .fibfact import fib, fib_poly, pell

__version__ = "0.1.0"
