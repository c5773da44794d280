"""Property sweep behind ``tridipow verify``.

Each check returns the worst observed error and the tolerance it must stay
under. Ranges grow with ``max_n`` (CLI ``--max-n`` or ``VERIFY_MAX_N``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import chebyshev, fibfact, numkit, powers, specmat
from .specmat import Family, FamilySpec

# (a, b) pairs; several have purely imaginary b
PARAM_GRID: list[tuple[complex, complex]] = [
    (1, 3),
    (0, 1j),
    (2, 1j),
    (-1, 1j),
    (0.25j, 1.5j),
    (1 + 0.5j, 2 - 1j),
    (-1.5 + 2j, 0.5 + 0.25j),
    (3, -1),
    (2 - 3j, -0.7 + 0.4j),
    (5, 0.5 - 2j),
]

DEFAULT_MAX_N = 12
SEED = 20240611


@dataclass(frozen=True)
class Outcome:
    name: str
    worst: float
    tolerance: float
    cases: int

    @property
    def passed(self) -> bool:
        return math.isfinite(self.worst) and self.worst <= self.tolerance


def rel_err(got, want) -> float:
    return float(np.abs(np.asarray(got) - np.asarray(want)).max() / max(1.0, np.abs(np.asarray(want)).max()))


def is_invertible(spec: FamilySpec) -> bool:
    scale = abs(spec.a) + 2 * abs(spec.b)
    return bool(np.abs(specmat.eigenvalues(spec)).min() > 1e-6 * scale)


def _random_complex(rng: np.random.Generator, size) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def _odd(lo: int, hi: int) -> range:
    return range(lo if lo % 2 else lo + 1, hi + 1, 2)


def check_sign_flip_det(max_n: int, trials: int = 200) -> Outcome:
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, max_n + 1))
        t = numkit.TridiagonalMatrix(_random_complex(rng, n), _random_complex(rng, n - 1), _random_complex(rng, n - 1))
        d1, d2 = numkit.tridiag_det(t), numkit.tridiag_det(t.sign_flipped())
        worst = max(worst, abs(d1 - d2) / max(abs(d1), 1e-300))
    return Outcome("det invariant under off-diagonal sign flip", worst, 1e-12, trials)


def check_inverse(max_n: int, trials: int = 50) -> Outcome:
    rng = np.random.default_rng(SEED + 1)
    worst, cases = 0.0, 0
    while cases < trials:
        n = int(rng.integers(1, max_n + 1))
        m = _random_complex(rng, (n, n))
        if np.linalg.cond(m) > 1e6:
            continue
        worst = max(worst, numkit.max_abs_diff(numkit.mat_mul(m, numkit.mat_inverse(m)), numkit.identity(n)))
        cases += 1
    return Outcome("mat_inverse(m) * m == I", worst, 1e-10, cases)


def check_oracle_group_law(max_n: int) -> Outcome:
    rng = np.random.default_rng(SEED + 2)
    worst, cases = 0.0, 0
    for _ in range(5):
        m = _random_complex(rng, (5, 5)) + 3 * np.eye(5)
        for r in range(-2, 4):
            for s in range(-2, 4):
                lhs = numkit.mat_pow_oracle(m, r + s)
                rhs = numkit.mat_mul(numkit.mat_pow_oracle(m, r), numkit.mat_pow_oracle(m, s))
                worst = max(worst, rel_err(rhs, lhs))
                cases += 1
    return Outcome("oracle power group law", worst, 1e-10, cases)


def check_delta_vs_U(max_n: int) -> Outcome:
    rng = np.random.default_rng(SEED + 3)
    worst, cases = 0.0, 0
    for t in 4 * np.sqrt(rng.uniform(0, 1, 40)) * np.exp(2j * np.pi * rng.uniform(0, 1, 40)):
        for n in range(0, max(30, max_n) + 1):
            d, u = chebyshev.delta_poly(n, complex(t)), chebyshev.cheb_U(n, complex(t) / 2)
            worst = max(worst, abs(d - u) / max(1.0, abs(u)))
            cases += 1
    return Outcome("delta_n(t) == U_n(t/2)", worst, 1e-12, cases)


def check_cheb_trig(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for twice in range(0, 21):
        for theta in np.linspace(0, np.pi, 33):
            got = chebyshev.cheb_T(chebyshev.ChebDegree(twice), math.cos(theta))
            worst = max(worst, abs(got - math.cos(twice / 2 * theta)))
            cases += 1
    return Outcome("T_s(cos t) == cos(s t)", worst, 1e-12, cases)


def _specs(max_n: int):
    for a, b in PARAM_GRID:
        for n in _odd(3, max(11, max_n)):
            yield FamilySpec(Family.A, n, a, b)
        for n in range(2, max(12, max_n) + 1):
            yield FamilySpec(Family.A_DAGGER, n, a, b)


def check_eigen_residuals(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for spec in _specs(max_n):
        for k in range(1, spec.n + 1):
            worst = max(worst, specmat.eigen_residual(spec, k))
            cases += 1
    return Outcome("eigen residual (A odd n, A_DAGGER all n)", worst, 1e-10, cases)


def check_det_eigen_product(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for a, b in PARAM_GRID:
        for family, lo in ((Family.A, 3), (Family.A_DAGGER, 2)):
            for n in range(lo, max(15, max_n) + 1):
                spec = FamilySpec(family, n, a, b)
                det = numkit.tridiag_det(specmat.build(spec))
                prod = complex(np.prod(specmat.eigenvalues(spec)))
                worst = max(worst, abs(det - prod) / max(abs(prod), 1e-300))
                cases += 1
    return Outcome("det == product of eigenvalues", worst, 1e-9, cases)


def check_modal_inverse(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for a, b in PARAM_GRID[:3]:
        for n in _odd(3, max(21, max_n)):
            spec = FamilySpec(Family.A, n, a, b)
            p, p_inv = powers.modal_matrix(spec), powers.modal_inverse(spec)
            worst = max(
                worst,
                numkit.max_abs_diff(p_inv, numkit.mat_inverse(p)),
                numkit.max_abs_diff(numkit.mat_mul(p, p_inv), numkit.identity(n)),
            )
            cases += 1
    return Outcome("closed-form modal inverse", worst, 1e-10, cases)


def check_power_oracle(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for a, b in PARAM_GRID:
        for n in _odd(3, max(11, max_n)):
            spec = FamilySpec(Family.A, n, a, b)
            dense = specmat.build(spec).to_dense()
            rs = range(-3, 7) if is_invertible(spec) else range(0, 7)
            for r in rs:
                closed = powers.power_closed(powers.PowerRequest(spec, r))
                worst = max(worst, rel_err(closed, numkit.mat_pow_oracle(dense, r)))
                cases += 1
    return Outcome("closed-form power == oracle power", worst, 1e-8, cases)


def check_power_group_law(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for a, b in PARAM_GRID:
        for n in _odd(3, max(11, max_n)):
            spec = FamilySpec(Family.A, n, a, b)
            rs = range(-2, 4) if is_invertible(spec) else range(0, 4)
            cache = {r: powers.power_closed(powers.PowerRequest(spec, r)) for r in range(2 * rs.start, 2 * rs.stop)}
            for r in rs:
                for s in rs:
                    worst = max(worst, rel_err(cache[r] @ cache[s], cache[r + s]))
                    cases += 1
    return Outcome("closed-form power group law", worst, 1e-8, cases)


def check_det_fibpoly(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for n in range(3, max(15, max_n) + 1):
        for x in (1, 2, 3, 1.5, -1):
            worst = max(worst, fibfact.detA_fibpoly_check(n, x).residual)
            cases += 1
    return Outcome("det A(x, i) == (x^2+4) F_{n-1}(x)", worst, 1e-10, cases)


def check_fibpoly_product(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for n in range(3, max(15, max_n) + 1):
        for x in (1, 2, 3, 1.5, -1):
            exact = fibfact.fib_poly(n - 1, x)
            worst = max(worst, abs(fibfact.fibpoly_factor_product(n, x) - exact) / abs(exact))
            cases += 1
    return Outcome("F_{n-1}(x) eigenvalue product", worst, 1e-9, cases)


def check_dagger_det(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for n in range(2, max(20, max_n) + 1):
        for v in fibfact.Variant:
            worst = max(worst, fibfact.detA_dagger_check(n, v).residual)
            cases += 1
    return Outcome("det A_DAGGER == (1+2i)F_n / (2+2i)P_n", worst, 1e-10, cases)


def _factor_pairs():
    return (
        (fibfact.fib_factor_product, fibfact.fib),
        (fibfact.pell_factor_product, fibfact.pell),
    )


def check_factor_products(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for n in range(1, max(40, max_n) + 1):
        for prod_fn, exact_fn in _factor_pairs():
            exact = exact_fn(n)
            worst = max(worst, abs(prod_fn(n).real - exact) / exact)
            cases += 1
    return Outcome("F_n, P_n eigenvalue products (real part)", worst, 1e-9, cases)


def check_factor_products_real(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for n in range(1, max(40, max_n) + 1):
        for prod_fn, _ in _factor_pairs():
            p = prod_fn(n)
            worst = max(worst, abs(p.imag) / abs(p.real))
            cases += 1
    return Outcome("F_n, P_n eigenvalue products (imag/real)", worst, 1e-8, cases)


def check_laplace_expansion(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for a, b in PARAM_GRID:
        for n in range(4, max(15, max_n) + 1):
            det = numkit.tridiag_det(specmat.build(FamilySpec(Family.A_DAGGER, n, a, b)))
            worst = max(worst, abs(fibfact.dagger_laplace_det(n, a, b) - det) / max(1.0, abs(det)))
            cases += 1
    return Outcome("A_DAGGER two-row Laplace expansion", worst, 1e-10, cases)


def check_tridiag_fib(max_n: int) -> Outcome:
    worst, cases = 0.0, 0
    for n in range(1, max(20, max_n) + 1):
        for x in (1, 2, 3, 1.5, -1):
            exact = fibfact.fib_poly(n + 1, x)
            worst = max(worst, abs(fibfact.tridiag_fib_det(n, x) - exact) / max(1.0, abs(exact)))
            cases += 1
    return Outcome("det tridiag_n(-i, x, -i) == F_{n+1}(x)", worst, 1e-12, cases)


CHECKS: list[Callable[[int], Outcome]] = [
    check_sign_flip_det,
    check_inverse,
    check_oracle_group_law,
    check_delta_vs_U,
    check_cheb_trig,
    check_eigen_residuals,
    check_det_eigen_product,
    check_modal_inverse,
    check_power_oracle,
    check_power_group_law,
    check_det_fibpoly,
    check_fibpoly_product,
    check_dagger_det,
    check_factor_products,
    check_factor_products_real,
    check_laplace_expansion,
    check_tridiag_fib,
]


def run_all(max_n: int = DEFAULT_MAX_N) -> list[Outcome]:
    return [check(max_n) for check in CHECKS]
