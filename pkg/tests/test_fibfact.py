import math
from fractions import Fraction

import numpy as np
import pytest

from tridipow.fibfact import (
    DegenerateParameterError,
    Variant,
    dagger_laplace_det,
    detA_dagger_check,
    detA_fibpoly_check,
    factor_terms,
    fib,
    fib_factor_product,
    fib_poly,
    fibpoly_factor_product,
    pell,
    pell_factor_product,
    tridiag_fib_det,
)
from tridipow.numkit import tridiag_det
from tridipow.specmat import Family, FamilySpec, build

XS = (1, 2, 3, 1.5, -1)


class TestSequences:
    def test_fibonacci_numbers(self):
        assert [fib_poly(n, 1) for n in range(7)] == [0, 1, 1, 2, 3, 5, 8]

    def test_pell_numbers(self):
        assert [fib_poly(n, 2) for n in range(6)] == [0, 1, 2, 5, 12, 29]

    def test_f2_is_x(self):
        assert fib_poly(2, 7) == 7

    def test_fib_pell(self):
        assert fib(0) == 0 and fib(10) == 55 and pell(5) == 29

    def test_exact_big(self):
        assert fib(40) == 102334155
        assert fib(100) == 354224848179261915075
        assert isinstance(fib(100), int)

    def test_binet(self):
        phi = (1 + math.sqrt(5)) / 2
        for n in range(1, 60):
            assert fib(n) == round(phi**n / math.sqrt(5))
        for n in range(1, 30):
            assert pell(n) == round((1 + math.sqrt(2)) ** n / (2 * math.sqrt(2)))

    def test_fraction_lane_exact(self):
        x = Fraction(3, 2)
        assert fib_poly(4, x) == x**3 + 2 * x

    def test_complex_argument(self):
        z = 0.5 + 1j
        assert fib_poly(3, z) == pytest.approx(z * z + 1)

    def test_negative_index(self):
        with pytest.raises(ValueError):
            fib_poly(-1, 1)


class TestFibDeterminant:
    @pytest.mark.parametrize("x", XS)
    def test_tridiag_identity(self, x):
        for n in range(1, 20):
            exact = fib_poly(n + 1, x)
            assert abs(tridiag_fib_det(n, x) - exact) <= 1e-12 * max(1, abs(exact))

    def test_detA_n3_x1(self):
        chk = detA_fibpoly_check(3, 1)
        assert chk.lhs == 5 and chk.rhs == 5 and chk.residual == 0

    @pytest.mark.parametrize("x", [0.3, -2.5, 4])
    def test_detA_n3_symbolic(self, x):
        assert detA_fibpoly_check(3, x).lhs == pytest.approx(x * (x * x + 4))

    def test_detA_n10_x2(self):
        assert detA_fibpoly_check(10, 2).residual <= 1e-10

    @pytest.mark.parametrize("x", XS)
    def test_detA_grid(self, x):
        for n in range(3, 16):
            chk = detA_fibpoly_check(n, x)
            assert chk.residual <= 1e-10
            dense = np.linalg.det(build(FamilySpec(Family.A, n, x, 1j)).to_dense())
            assert abs(dense - chk.rhs) <= 1e-9 * max(1, abs(chk.rhs))

    def test_detA_requires_n3(self):
        with pytest.raises(ValueError):
            detA_fibpoly_check(2, 1)


class TestFibPolyProduct:
    def test_n3_x1(self):
        assert fibpoly_factor_product(3, 1) == pytest.approx(1)

    def test_n5_x1(self):
        # order-5 matrix gives F_4(1) = 3
        assert fibpoly_factor_product(5, 1) == pytest.approx(3)
        assert fib(4) == 3

    def test_n6_x2(self):
        # order-6 matrix gives F_5(2) = P_5 = 29
        assert fibpoly_factor_product(6, 2) == pytest.approx(29)
        assert pell(5) == 29

    def test_brute_force_product(self):
        terms = [2 + 2j * math.cos((k - 1) * math.pi / 5) for k in range(1, 7)]
        assert np.prod(terms) / 8 == pytest.approx(fibpoly_factor_product(6, 2))

    @pytest.mark.parametrize("x", XS)
    def test_grid(self, x):
        for n in range(3, 16):
            exact = fib_poly(n - 1, x)
            assert abs(fibpoly_factor_product(n, x) - exact) <= 1e-9 * abs(exact)

    def test_endpoint_factors(self):
        terms = factor_terms(7, 1.5, "A")
        assert terms[0] * terms[-1] == pytest.approx(1.5**2 + 4)

    @pytest.mark.parametrize("x", [2j, -2j])
    def test_degenerate(self, x):
        with pytest.raises(DegenerateParameterError):
            fibpoly_factor_product(5, x)


class TestDaggerDeterminant:
    def test_n2_fib(self):
        chk = detA_dagger_check(2, Variant.FIB)
        assert chk.lhs == (1 + 1j) ** 2 - (1j) ** 2 == 1 + 2j

    def test_n3_fib(self):
        chk = detA_dagger_check(3, Variant.FIB)
        assert chk.lhs == pytest.approx(2 + 4j) and chk.rhs == (1 + 2j) * 2

    def test_n2_pell(self):
        chk = detA_dagger_check(2, Variant.PELL)
        assert chk.lhs == (2 + 1j) ** 2 - (1j) ** 2 == 4 + 4j

    @pytest.mark.parametrize("variant", list(Variant))
    def test_range(self, variant):
        for n in range(2, 21):
            chk = detA_dagger_check(n, variant)
            assert chk.residual <= 1e-10
            dense = np.linalg.det(build(FamilySpec(Family.A_DAGGER, n, variant.a, 1j)).to_dense())
            assert abs(dense - chk.rhs) <= 1e-9 * abs(chk.rhs)

    def test_laplace_expansion_matches(self, ab):
        a, b = ab
        for n in range(4, 16):
            det = tridiag_det(build(FamilySpec(Family.A_DAGGER, n, a, b)))
            assert abs(dagger_laplace_det(n, a, b) - det) <= 1e-10 * max(1, abs(det))

    def test_laplace_needs_four(self):
        with pytest.raises(ValueError):
            dagger_laplace_det(3, 1, 1j)


class TestFactorProducts:
    def test_fib_n2(self):
        assert fib_factor_product(2) == pytest.approx(1)

    def test_fib_n3(self):
        assert fib_factor_product(3) == pytest.approx(2)

    def test_pell_n3(self):
        assert pell_factor_product(3) == pytest.approx(5)

    def test_empty_product(self):
        assert fib_factor_product(1) == 1 and pell_factor_product(1) == 1

    def test_up_to_40(self):
        for n in range(1, 41):
            for prod_fn, exact_fn in ((fib_factor_product, fib), (pell_factor_product, pell)):
                p, exact = prod_fn(n), exact_fn(n)
                assert abs(p.imag) <= 1e-8 * p.real
                assert abs(p.real - exact) <= 1e-9 * exact

    @pytest.mark.parametrize("a", [1, 2])
    def test_conjugate_pairs(self, a):
        for n in range(2, 30):
            terms = factor_terms(n, a, "A_DAGGER")
            for k in range(1, n):
                pair = terms[k - 1] * terms[n - k - 1]
                assert abs(pair.imag) <= 1e-12 * abs(pair)
