"""Fibonacci polynomials, Fibonacci/Pell numbers and their complex factorizations.

With ``b = i`` the two matrix families turn into determinant representations
of these sequences:

* ``det A(n; a=x, b=i)      == (x**2 + 4) F_{n-1}(x)``
* ``det A_DAGGER(n; 1, i)   == (1 + 2i) F_n``
* ``det A_DAGGER(n; 2, i)   == (2 + 2i) P_n``

and the eigenvalue products give the factorizations. Exact values use Python
ints; the products are floating point.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple

from .numkit import TridiagonalMatrix, tridiag_det
from .specmat import Family, FamilySpec, build

__all__ = [
    "DegenerateParameterError",
    "IdentityCheck",
    "Variant",
    "fib_poly",
    "fib",
    "pell",
    "tridiag_fib_det",
    "detA_fibpoly_check",
    "fibpoly_factor_product",
    "detA_dagger_check",
    "dagger_laplace_det",
    "fib_factor_product",
    "pell_factor_product",
    "factor_terms",
]


class DegenerateParameterError(ValueError):
    pass


class IdentityCheck(NamedTuple):
    lhs: complex
    rhs: complex
    residual: float


class Variant(enum.Enum):
    FIB = 1
    PELL = 2

    @property
    def a(self) -> int:
        return self.value

    @property
    def det_factor(self) -> complex:
        return complex(self.value, 2)


def _residual(lhs, rhs) -> float:
    return abs(lhs - rhs) / max(1.0, abs(rhs))


def fib_poly(n: int, x):
    """``F_n(x)`` from ``F_n = x F_{n-1} + F_{n-2}``, ``F_0 = 0``, ``F_1 = 1``.

    The result has the type of ``x``'s arithmetic, so ints and Fractions
    give exact values.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    prev, cur = 0 * x, 0 * x + 1
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur + prev
    return cur


def fib(n: int) -> int:
    return fib_poly(n, 1)


def pell(n: int) -> int:
    return fib_poly(n, 2)


def tridiag_fib_det(n: int, x) -> complex:
    """``det tridiag_n(-i, x, -i)``, which should equal ``F_{n+1}(x)``."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return tridiag_det(TridiagonalMatrix([x] * n, [-1j] * (n - 1), [-1j] * (n - 1)))


def detA_fibpoly_check(n: int, x) -> IdentityCheck:
    if n < 3:
        raise ValueError("needs n >= 3")
    lhs = tridiag_det(build(FamilySpec(Family.A, n, x, 1j)))
    rhs = complex((x * x + 4) * fib_poly(n - 1, x))
    return IdentityCheck(lhs, rhs, _residual(lhs, rhs))


def factor_terms(n: int, a, grid: str) -> list[complex]:
    """The eigenvalue factors with ``b = i``.

    ``grid="A"`` gives ``a + 2i cos((k-1)pi/(n-1))`` for k = 1..n;
    ``grid="A_DAGGER"`` gives ``a - 2i cos(k pi/n)`` for k = 1..n-1 (the
    k = n factor ``a + 2i`` is left out).
    """
    if grid == "A":
        return [a + 2j * math.cos((k - 1) * math.pi / (n - 1)) for k in range(1, n + 1)]
    if grid == "A_DAGGER":
        return [a - 2j * math.cos(k * math.pi / n) for k in range(1, n)]
    raise ValueError(f"unknown grid {grid!r}")


def _product(terms) -> complex:
    out = complex(1.0)
    for t in terms:
        out *= t
    return out


def fibpoly_factor_product(n: int, x) -> complex:
    """``(1/(x^2+4)) * prod_k (x + 2i cos((k-1)pi/(n-1)))``, meant to equal ``F_{n-1}(x)``."""
    if n < 3:
        raise ValueError("needs n >= 3")
    denom = x * x + 4
    if denom == 0:
        raise DegenerateParameterError("x = +-2i makes x^2 + 4 vanish")
    return _product(factor_terms(n, x, "A")) / denom


def detA_dagger_check(n: int, variant: Variant) -> IdentityCheck:
    if n < 2:
        raise ValueError("needs n >= 2")
    variant = Variant(variant)
    lhs = tridiag_det(build(FamilySpec(Family.A_DAGGER, n, variant.a, 1j)))
    exact = fib(n) if variant is Variant.FIB else pell(n)
    rhs = variant.det_factor * exact
    return IdentityCheck(lhs, rhs, _residual(lhs, rhs))


def dagger_laplace_det(n: int, a, b) -> complex:
    """``det A_DAGGER`` from the expansion along the two first and two last rows.

    ``(a+b)^2 D_{n-2} - 2 b^2 (a+b) D_{n-3} + b^4 D_{n-4}``, where ``D_m`` is
    the determinant of ``tridiag_m(-b, a, -b)`` (``D_0 = 1``).
    """
    if n < 4:
        raise ValueError("expansion needs n >= 4")
    d = [complex(1.0), complex(a)]
    for _ in range(2, n - 1):
        d.append(a * d[-1] - b * b * d[-2])
    return (a + b) ** 2 * d[n - 2] - 2 * b * b * (a + b) * d[n - 3] + b**4 * d[n - 4]


def fib_factor_product(n: int) -> complex:
    """``prod_{k=1}^{n-1} (1 - 2i cos(k pi / n))``, meant to equal ``F_n``."""
    if n < 1:
        raise ValueError("needs n >= 1")
    return _product(factor_terms(n, 1, "A_DAGGER"))


def pell_factor_product(n: int) -> complex:
    """``prod_{k=1}^{n-1} (2 - 2i cos(k pi / n))``, meant to equal ``P_n``."""
    if n < 1:
        raise ValueError("needs n >= 1")
    return _product(factor_terms(n, 2, "A_DAGGER"))
