"""Integer powers of family ``A`` through its eigen-decomposition.

For odd n the modal matrix ``P`` has entries ``P[j, k] = s_j T_{j-1}(m_k)``
on the Chebyshev-Gauss-Lobatto nodes ``m_k``, so the discrete cosine
orthogonality (endpoint terms halved in both indices) gives the inverse in
closed form::

    Pinv[k, j] = 2/(n-1) * c_k * w_j * s_j * T_{j-1}(m_k)

with ``c_k = 1/2`` for k in {1, n}, ``w_j = 1/2`` for j in {1, n}, and 1
otherwise. Then ``A**r = P diag(lambda_k**r) Pinv``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .chebyshev import cheb_T
from .numkit import (
    SingularMatrixError,
    int_power,
    mat_inverse,
    mat_pow_oracle,
    max_abs_diff,
)
from .specmat import (
    Family,
    FamilySpec,
    SpectralData,
    build,
    eigenvalues,
    eigenvector,
    eigenvector_sign,
    nodes,
)

__all__ = [
    "Method",
    "PowerRequest",
    "PowerResult",
    "CrossCheckError",
    "modal_matrix",
    "modal_inverse",
    "spectral_data",
    "power_closed",
    "power_entry",
    "power",
    "CROSSCHECK_MAX_N",
    "CROSSCHECK_RTOL",
]

CROSSCHECK_MAX_N = 64
CROSSCHECK_RTOL = 1e-8
# |lambda| below this fraction of the spectral scale counts as a zero eigenvalue
ZERO_EIG_RTOL = 1e-12


class Method(enum.Enum):
    CLOSED_FORM = "closed_form"
    ORACLE = "oracle"


class CrossCheckError(ArithmeticError):
    """Closed form and oracle disagree beyond the configured tolerance."""


@dataclass(frozen=True)
class PowerRequest:
    spec: FamilySpec
    r: int

    def __post_init__(self):
        if self.spec.family is not Family.A:
            raise ValueError("integer powers are only provided for family A")
        if int(self.r) != self.r:
            raise ValueError(f"exponent must be an integer, got {self.r!r}")
        object.__setattr__(self, "r", int(self.r))


@dataclass(frozen=True)
class PowerResult:
    value: np.ndarray
    method: Method
    cross_check_residual: Optional[float] = None


def _require_odd_a(spec: FamilySpec):
    if spec.family is not Family.A:
        raise ValueError("closed-form powers exist only for family A")
    if spec.n < 3 or spec.n % 2 == 0:
        raise ValueError(f"closed-form powers need odd n >= 3, got n={spec.n}")


def _cheb_table(m: np.ndarray) -> np.ndarray:
    """``table[d, k] = T_d(m_k)`` for d = 0..n-1."""
    n = len(m)
    return np.array([[cheb_T(d, float(mk)) for mk in m] for d in range(n)], dtype=np.float64)


def modal_matrix(spec: FamilySpec) -> np.ndarray:
    _require_odd_a(spec)
    n = spec.n
    signs = np.array([eigenvector_sign(j, n) for j in range(1, n + 1)], dtype=np.float64)
    return (signs[:, None] * _cheb_table(nodes(spec))).astype(np.complex128)


def modal_inverse(spec: FamilySpec) -> np.ndarray:
    _require_odd_a(spec)
    n = spec.n
    halve = np.ones(n)
    halve[[0, -1]] = 0.5
    signs = np.array([eigenvector_sign(j, n) for j in range(1, n + 1)], dtype=np.float64)
    table = _cheb_table(nodes(spec))  # [j-1, k]
    inv = (2.0 / (n - 1)) * halve[:, None] * (halve * signs)[None, :] * table.T
    return inv.astype(np.complex128)


def spectral_data(spec: FamilySpec) -> SpectralData:
    """Eigenvalues, nodes, modal matrix and its inverse.

    The inverse is closed-form for odd-order family ``A`` and numeric
    otherwise.
    """
    if spec.family is Family.A and spec.n % 2 == 1:
        p, p_inv = modal_matrix(spec), modal_inverse(spec)
    else:
        p = np.column_stack([eigenvector(spec, k) for k in range(1, spec.n + 1)])
        p_inv = mat_inverse(p)
    return SpectralData(eigenvalues(spec), nodes(spec), p, p_inv)


def _powered_eigenvalues(spec: FamilySpec, r: int) -> np.ndarray:
    lam = eigenvalues(spec)
    if r < 0:
        scale = abs(spec.a) + 2 * abs(spec.b)
        small = np.abs(lam) <= ZERO_EIG_RTOL * scale
        if small.any():
            k = int(np.flatnonzero(small)[0]) + 1
            raise SingularMatrixError(f"eigenvalue lambda_{k} = {lam[k - 1]} is zero; A is not invertible")
    return np.array([int_power(complex(z), r) for z in lam], dtype=np.complex128)


def power_closed(req: PowerRequest) -> np.ndarray:
    spec = req.spec
    _require_odd_a(spec)
    lam_r = _powered_eigenvalues(spec, req.r)
    return (modal_matrix(spec) * lam_r[None, :]) @ modal_inverse(spec)


def power_entry(req: PowerRequest, i: int, j: int) -> complex:
    """Single entry (1-based) of ``A**r`` without forming the full product."""
    spec = req.spec
    _require_odd_a(spec)
    n = spec.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"entry ({i}, {j}) outside a {n}x{n} matrix")
    lam_r = _powered_eigenvalues(spec, req.r)
    m = nodes(spec)
    c = np.ones(n)
    c[[0, -1]] = 0.5
    w_j = 0.5 if j in (1, n) else 1.0
    sign = eigenvector_sign(i, n) * eigenvector_sign(j, n)
    total = 0j
    for k in range(n):
        total += lam_r[k] * c[k] * cheb_T(i - 1, float(m[k])) * cheb_T(j - 1, float(m[k]))
    return complex(sign * w_j * 2.0 / (n - 1) * total)


def power(
    req: PowerRequest,
    crosscheck_max_n: int = CROSSCHECK_MAX_N,
    rtol: float = CROSSCHECK_RTOL,
) -> PowerResult:
    """Dispatch: closed form for odd n (cross-checked when small), oracle for even n."""
    spec = req.spec
    if spec.n % 2 == 0 or spec.n < 3:
        return PowerResult(mat_pow_oracle(build(spec).to_dense(), req.r), Method.ORACLE)

    value = power_closed(req)
    if spec.n > crosscheck_max_n:
        return PowerResult(value, Method.CLOSED_FORM)
    reference = mat_pow_oracle(build(spec).to_dense(), req.r)
    resid = max_abs_diff(value, reference)
    scale = max(1.0, float(np.abs(reference).max()))
    if resid > rtol * scale:
        raise CrossCheckError(
            f"closed form deviates from oracle by {resid:.3e} (allowed {rtol * scale:.3e})"
        )
    return PowerResult(value, Method.CLOSED_FORM, resid)
