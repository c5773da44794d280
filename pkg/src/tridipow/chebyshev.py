"""Chebyshev polynomials at complex arguments.

First-kind values accept integer and half-integer degrees. Integer
degrees go through the three-term recurrence so integer arguments stay
exact; half-integer degrees use ``cos(s * acos(x))`` with the principal
branch of the complex arccosine.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number

__all__ = ["ChebDegree", "cheb_T", "cheb_U", "delta_poly"]


@dataclass(frozen=True, order=True)
class ChebDegree:
    """Degree stored doubled, so ``ChebDegree(5)`` is the degree 5/2."""

    twice_degree: int

    def __post_init__(self):
        if int(self.twice_degree) != self.twice_degree or self.twice_degree < 0:
            raise ValueError(f"twice_degree must be a nonnegative integer, got {self.twice_degree!r}")
        object.__setattr__(self, "twice_degree", int(self.twice_degree))

    @classmethod
    def of(cls, degree) -> "ChebDegree":
        """Build from an int, ``Fraction`` or float that is a multiple of 1/2."""
        if isinstance(degree, ChebDegree):
            return degree
        twice = Fraction(degree) * 2
        if twice.denominator != 1:
            raise ValueError(f"degree must be an integer or half-integer, got {degree!r}")
        return cls(int(twice))

    @property
    def is_integer(self) -> bool:
        return self.twice_degree % 2 == 0

    @property
    def value(self) -> float:
        return self.twice_degree / 2


def _recurrence(n: int, x, first):
    # p_0 = 1, p_1 = first, p_{k+1} = 2x p_k - p_{k-1}
    if n == 0:
        return 1 + 0 * x
    prev, cur = 1 + 0 * x, first
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def cheb_T(degree, x: Number):
    """First-kind Chebyshev value ``T_s(x)``.

    ``degree`` may be an int, a half-integer (``Fraction(5, 2)``, ``2.5``)
    or a :class:`ChebDegree`.
    """
    deg = ChebDegree.of(degree)
    if deg.is_integer:
        return _recurrence(deg.twice_degree // 2, x, x)
    theta = cmath.acos(x)
    val = cmath.cos(deg.value * theta)
    if isinstance(x, complex) or abs(val.imag) > 0.0:
        return val
    return val.real


def cheb_U(n: int, x: Number):
    """Second-kind Chebyshev value ``U_n(x)``."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return _recurrence(n, x, 2 * x)


def delta_poly(n: int, t: Number):
    """The determinant sequence ``D_n = t D_{n-1} - D_{n-2}``, ``D_0 = 1``, ``D_1 = t``.

    Kept as its own recurrence (not routed through :func:`cheb_U`) so the
    identity ``D_n(t) == U_n(t/2)`` can be checked independently.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    prev, cur = 1 + 0 * t, t
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, t * cur - prev
    return cur
