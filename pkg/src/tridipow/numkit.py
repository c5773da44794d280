"""Small complex linear-algebra kernel.

Dense matrices are plain ``numpy`` arrays of dtype ``complex128``. Nothing
here knows about the special matrix families; these routines are the
brute-force reference that the closed-form results get checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "SingularMatrixError",
    "DimensionMismatchError",
    "TridiagonalMatrix",
    "as_matrix",
    "identity",
    "mat_mul",
    "mat_pow_oracle",
    "mat_inverse",
    "tridiag_det",
    "max_abs_diff",
    "int_power",
]

PIVOT_RTOL = 1e-12


class SingularMatrixError(ArithmeticError):
    """Raised when a matrix (or eigenvalue) is numerically zero where an inverse is needed."""


class DimensionMismatchError(ValueError):
    pass


def _check_finite(m: np.ndarray, what: str) -> np.ndarray:
    if not np.all(np.isfinite(m)):
        raise FloatingPointError(f"{what}: non-finite entries in result")
    return m


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a square complex matrix, rejecting anything else."""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise DimensionMismatchError(f"expected a non-empty square matrix, got shape {arr.shape}")
    return arr


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Tridiagonal matrix stored as its three bands.

    ``sub[i]`` sits at ``(i+1, i)`` and ``sup[i]`` at ``(i, i+1)``.
    """

    diag: tuple[complex, ...]
    sub: tuple[complex, ...] = field(default=())
    sup: tuple[complex, ...] = field(default=())

    def __post_init__(self):
        # entries keep their type so Fraction/int bands give exact determinants
        diag, sub, sup = tuple(self.diag), tuple(self.sub), tuple(self.sup)
        n = len(diag)
        if n < 1:
            raise ValueError("tridiagonal matrix needs at least one diagonal entry")
        if len(sub) != n - 1 or len(sup) != n - 1:
            raise ValueError(
                f"band lengths must be (n-1, n, n-1) = ({n - 1}, {n}, {n - 1}), "
                f"got ({len(sub)}, {n}, {len(sup)})"
            )
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "sub", sub)
        object.__setattr__(self, "sup", sup)

    @property
    def n(self) -> int:
        return len(self.diag)

    def to_dense(self) -> np.ndarray:
        m = np.diag(np.array(self.diag, dtype=np.complex128))
        if self.n > 1:
            idx = np.arange(self.n - 1)
            m[idx + 1, idx] = self.sub
            m[idx, idx + 1] = self.sup
        return m

    def sign_flipped(self) -> "TridiagonalMatrix":
        """Same diagonal, every off-diagonal entry negated."""
        return TridiagonalMatrix(
            self.diag, tuple(-v for v in self.sub), tuple(-v for v in self.sup)
        )


def mat_mul(lhs, rhs) -> np.ndarray:
    lhs, rhs = as_matrix(lhs), as_matrix(rhs)
    if lhs.shape != rhs.shape:
        raise DimensionMismatchError(f"cannot multiply {lhs.shape} by {rhs.shape}")
    with np.errstate(over="ignore", invalid="ignore"):
        prod = lhs @ rhs
    return _check_finite(prod, "mat_mul")


def mat_inverse(m) -> np.ndarray:
    """Gauss-Jordan inverse with partial pivoting.

    Raises :class:`SingularMatrixError` once the best available pivot drops
    below ``PIVOT_RTOL`` times the largest entry magnitude of ``m``.
    """
    a = as_matrix(m).copy()
    n = a.shape[0]
    inv = identity(n)
    scale = np.abs(a).max()
    if scale == 0.0:
        raise SingularMatrixError("zero matrix is not invertible")
    threshold = PIVOT_RTOL * scale

    for col in range(n):
        piv = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[piv, col]) < threshold:
            raise SingularMatrixError(
                f"pivot {abs(a[piv, col]):.3e} in column {col} below threshold {threshold:.3e}"
            )
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            inv[[col, piv]] = inv[[piv, col]]
        p = a[col, col]
        a[col] /= p
        inv[col] /= p
        factors = a[:, col].copy()
        factors[col] = 0.0
        a -= np.outer(factors, a[col])
        inv -= np.outer(factors, inv[col])
    return _check_finite(inv, "mat_inverse")


def mat_pow_oracle(m, r: int) -> np.ndarray:
    """``m**r`` by binary exponentiation; negative ``r`` inverts first."""
    m = as_matrix(m)
    r = int(r)
    if r < 0:
        m = mat_inverse(m)
        r = -r
    result = identity(m.shape[0])
    base = m
    while r:
        if r & 1:
            result = mat_mul(result, base)
        r >>= 1
        if r:
            base = mat_mul(base, base)
    return result


def int_power(z: complex, r: int) -> complex:
    """Scalar ``z**r`` for integer ``r`` by repeated squaring (no complex log)."""
    r = int(r)
    if r < 0:
        if z == 0:
            raise SingularMatrixError("zero raised to a negative power")
        z = 1.0 / z
        r = -r
    result = complex(1.0)
    while r:
        if r & 1:
            result *= z
        r >>= 1
        if r:
            z *= z
    return result


def tridiag_det(t: TridiagonalMatrix) -> complex:
    """Determinant by the three-term continuant recurrence.

    ``|H(k)| = h_kk |H(k-1)| - h_{k-1,k} h_{k,k-1} |H(k-2)|`` with
    ``|H(0)| = 1``, which reproduces ``|H(2)| = h11 h22 - h12 h21``.
    """
    prev, cur = 1, t.diag[0]
    for k in range(1, t.n):
        prev, cur = cur, t.diag[k] * cur - t.sup[k - 1] * t.sub[k - 1] * prev
    return cur


def max_abs_diff(lhs, rhs) -> float:
    lhs, rhs = np.asarray(lhs, dtype=np.complex128), np.asarray(rhs, dtype=np.complex128)
    if lhs.shape != rhs.shape:
        raise DimensionMismatchError(f"shape mismatch {lhs.shape} vs {rhs.shape}")
    return float(np.abs(lhs - rhs).max())
