"""The two tridiagonal families and their closed-form eigenpairs.

Family ``A`` (order n, parameters a and b != 0)::

    a   2b
    b   a  -b
       -b   a  -b
            ..  ..  ..
               -b   a   b
                   2b   a

Family ``A_DAGGER`` replaces the corner off-diagonals by ``b`` and the two
corner diagonal entries by ``a + b``. Interior off-diagonals are ``-b`` in
both families; the endpoint entries win where the patterns overlap (n = 2, 3).

Eigenvalues are ``a + 2b m_k`` with real nodes ``m_k``:

* ``A``:        ``m_k = cos((k-1) pi / (n-1))``, k = 1..n
* ``A_DAGGER``: ``m_k = -cos(k pi / n)``,        k = 1..n

Eigenvector component j is ``s_j T_d(m_k)`` with Chebyshev degree
``d = j - 1`` (``A``) or ``d = (2j - 1)/2`` (``A_DAGGER``), and sign
``s_j = (-1)**j`` for ``3 <= j <= n-2``, ``+1`` for ``j <= 2`` and
``(-1)**(n-1)`` for ``j >= n-1``. For odd n the last rule is just ``+1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chebyshev import cheb_T
from .numkit import TridiagonalMatrix

__all__ = [
    "Family",
    "FamilySpec",
    "SpectralData",
    "build",
    "nodes",
    "eigenvalues",
    "eigenvector",
    "eigenvector_sign",
    "pair_residual",
    "eigen_residual",
]


class Family(enum.Enum):
    A = "A"
    A_DAGGER = "A_DAGGER"

    @classmethod
    def parse(cls, text: str) -> "Family":
        key = text.strip().upper().replace("-", "_").replace("†", "_DAGGER")
        aliases = {"A": cls.A, "A_DAGGER": cls.A_DAGGER, "ADAGGER": cls.A_DAGGER, "AD": cls.A_DAGGER}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown family {text!r} (expected 'A' or 'A_DAGGER')") from None


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    a: complex
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"order n must be an integer >= 2, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if self.b == 0:
            raise ValueError("off-diagonal parameter b must be nonzero")
        if not (math.isfinite(abs(self.a)) and math.isfinite(abs(self.b))):
            raise ValueError("parameters a and b must be finite")

    def _require_eigen_formula(self):
        if self.family is Family.A and self.n < 3:
            raise ValueError("family A needs n >= 3 for its eigenvalue grid (k-1)pi/(n-1)")


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: np.ndarray
    nodes: np.ndarray
    modal: np.ndarray
    modal_inv: np.ndarray


def build(spec: FamilySpec) -> TridiagonalMatrix:
    n, a, b = spec.n, spec.a, spec.b
    sup = [-b] * (n - 1)
    sub = [-b] * (n - 1)
    diag = [a] * n
    if spec.family is Family.A:
        sup[0], sub[0] = 2 * b, b
        sup[-1], sub[-1] = b, 2 * b
    else:
        sup[0] = sub[0] = b
        sup[-1] = sub[-1] = b
        diag[0] += b
        diag[-1] += b
    return TridiagonalMatrix(diag, sub, sup)


def nodes(spec: FamilySpec) -> np.ndarray:
    """Real nodes ``m_k`` in k = 1..n order.

    Written as sines of a symmetric grid so the middle node is exactly 0 and
    ``m_k == -m_{n+1-k}`` holds bitwise.
    """
    spec._require_eigen_formula()
    n = spec.n
    k = np.arange(1, n + 1)
    if spec.family is Family.A:
        # cos((k-1)pi/(n-1)) == sin((n+1-2k) pi / (2(n-1)))
        return np.sin((n + 1 - 2 * k) * np.pi / (2 * (n - 1)))
    # -cos(k pi/n) == sin((2k-n) pi / (2n))
    return np.sin((2 * k - n) * np.pi / (2 * n))


def eigenvalues(spec: FamilySpec) -> np.ndarray:
    return spec.a + 2 * spec.b * nodes(spec).astype(np.complex128)


def eigenvector_sign(j: int, n: int) -> int:
    if j <= 2:
        return 1
    if j >= n - 1:
        return -1 if (n - 1) % 2 else 1
    return -1 if j % 2 else 1


def _degree(family: Family, j: int):
    return j - 1 if family is Family.A else Fraction(2 * j - 1, 2)


def eigenvector(spec: FamilySpec, k: int) -> np.ndarray:
    """Unnormalised k-th eigenvector (first component 1 for family ``A``)."""
    n = spec.n
    if not 1 <= k <= n:
        raise IndexError(f"eigen index k must lie in 1..{n}, got {k}")
    m = float(nodes(spec)[k - 1])
    return np.array(
        [eigenvector_sign(j, n) * cheb_T(_degree(spec.family, j), m) for j in range(1, n + 1)],
        dtype=np.complex128,
    )


def pair_residual(matrix, vector, value) -> float:
    """``|M v - value v|_inf / (|M|_inf |v|_inf)``."""
    m = np.asarray(matrix, dtype=np.complex128)
    v = np.asarray(vector, dtype=np.complex128)
    norm_m = np.abs(m).sum(axis=1).max()
    norm_v = np.abs(v).max()
    if norm_m == 0 or norm_v == 0:
        raise ValueError("residual undefined for zero matrix or zero vector")
    return float(np.abs(m @ v - value * v).max() / (norm_m * norm_v))


def eigen_residual(spec: FamilySpec, k: int) -> float:
    m = build(spec).to_dense()
    return pair_residual(m, eigenvector(spec, k), eigenvalues(spec)[k - 1])
