import itertools
import math

import numpy as np
import pytest

from tridipow.chebyshev import cheb_T
from tridipow.numkit import tridiag_det
from tridipow.specmat import (
    Family,
    FamilySpec,
    build,
    eigen_residual,
    eigenvalues,
    eigenvector,
    eigenvector_sign,
    nodes,
    pair_residual,
)

A, AD = Family.A, Family.A_DAGGER


def as_set(values, digits=12):
    return sorted((round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0) for z in values)


class TestSpec:
    def test_rejects_zero_b(self):
        with pytest.raises(ValueError):
            FamilySpec(A, 3, 1, 0)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            FamilySpec(AD, 1, 1, 1)

    def test_family_from_string(self):
        assert FamilySpec("A_DAGGER", 3, 1, 1).family is AD
        assert Family.parse("a†") is AD

    def test_family_a_needs_three(self):
        spec = FamilySpec(A, 2, 1, 1)
        with pytest.raises(ValueError):
            eigenvalues(spec)
        with pytest.raises(ValueError):
            eigenvector(spec, 1)


class TestBuild:
    def test_a_n3(self):
        np.testing.assert_array_equal(
            build(FamilySpec(A, 3, 1, 3)).to_dense(), [[1, 6, 0], [3, 1, 3], [0, 6, 1]]
        )

    def test_a_n5_pattern(self):
        a, b = 2, 1j
        np.testing.assert_array_equal(
            build(FamilySpec(A, 5, a, b)).to_dense(),
            [
                [a, 2 * b, 0, 0, 0],
                [b, a, -b, 0, 0],
                [0, -b, a, -b, 0],
                [0, 0, -b, a, b],
                [0, 0, 0, 2 * b, a],
            ],
        )

    def test_dagger_n3(self):
        a, b = 1 + 1j, 2
        np.testing.assert_array_equal(
            build(FamilySpec(AD, 3, a, b)).to_dense(), [[a + b, b, 0], [b, a, b], [0, b, a + b]]
        )

    def test_dagger_n2(self):
        a, b = 0.5, -1j
        np.testing.assert_array_equal(build(FamilySpec(AD, 2, a, b)).to_dense(), [[a + b, b], [b, a + b]])

    def test_dagger_n6_pattern(self):
        m = build(FamilySpec(AD, 6, 0, 1)).to_dense().real
        assert list(np.diag(m)) == [1, 0, 0, 0, 0, 1]
        assert list(np.diag(m, 1)) == [1, -1, -1, -1, 1]
        assert list(np.diag(m, -1)) == [1, -1, -1, -1, 1]


class TestEigenvalues:
    def test_example_n3(self):
        assert as_set(eigenvalues(FamilySpec(A, 3, 1, 3))) == as_set([1, 7, -5])

    def test_example_n5(self):
        s2 = 3 * math.sqrt(2)
        assert as_set(eigenvalues(FamilySpec(A, 5, 1, 3)), 10) == as_set([7, 1 + s2, 1, 1 - s2, -5], 10)

    def test_k_order(self):
        lam = eigenvalues(FamilySpec(A, 3, 1, 3))
        np.testing.assert_array_equal(lam, [7, 1, -5])

    def test_dagger_n2(self):
        a, b = 1 + 2j, 0.5 - 1j
        assert as_set(eigenvalues(FamilySpec(AD, 2, a, b))) == as_set([a, a + 2 * b])

    @pytest.mark.parametrize("n", range(3, 12))
    def test_family_a_matches_reference_t_matrix(self, n):
        # spectrum of tridiag with sup (2, 1, ..., 1), sub (1, ..., 1, 2), zero diagonal
        t = np.eye(n, k=1) + np.eye(n, k=-1)
        t[0, 1] = 2
        t[n - 1, n - 2] = 2
        ref = np.linalg.eigvals(t)
        got = eigenvalues(FamilySpec(A, n, 0, 1))
        assert as_set(got, 9) == as_set(ref, 9)

    @pytest.mark.parametrize("n", range(2, 12))
    def test_dagger_formula_vs_numpy(self, n, ab):
        a, b = ab
        spec = FamilySpec(AD, n, a, b)
        ref = np.linalg.eigvals(build(spec).to_dense())
        expected = [a - 2 * b * math.cos(k * math.pi / n) for k in range(1, n + 1)]
        assert as_set(eigenvalues(spec), 8) == as_set(expected, 8) == as_set(ref, 8)

    def test_nodes_exact_symmetry(self):
        for fam, n in itertools.product((A, AD), range(3, 16)):
            m = nodes(FamilySpec(fam, n, 0, 1))
            assert np.all(np.abs(m) <= 1)
            if fam is AD:
                # k = 1..n-1 pair up; the k = n node is +1
                assert m[-1] == 1
                m = m[:-1]
            np.testing.assert_array_equal(m, -m[::-1])

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
    def test_odd_a_middle_eigenvalue_is_a(self, n):
        spec = FamilySpec(A, n, 0.3 + 2j, 5)
        assert eigenvalues(spec)[(n - 1) // 2] == spec.a

    def test_pairwise_distinct(self, ab):
        a, b = ab
        for fam, lo in ((A, 3), (AD, 2)):
            for n in range(lo, 16):
                lam = eigenvalues(FamilySpec(fam, n, a, b))
                gaps = np.abs(lam[:, None] - lam[None, :]) + np.eye(n) * 1e300
                assert gaps.min() > 1e-12 * abs(b)


class TestEigenvectors:
    def test_a_n3_k1(self):
        v = eigenvector(FamilySpec(A, 3, 1, 3), 1)
        np.testing.assert_array_equal(v, [1, 1, 1])
        np.testing.assert_array_equal(build(FamilySpec(A, 3, 1, 3)).to_dense() @ v, 7 * v)

    def test_a_n5_components(self):
        spec = FamilySpec(A, 5, 1, 3)
        for k in range(1, 6):
            m = math.cos((k - 1) * math.pi / 4)
            expected = [cheb_T(0, m), cheb_T(1, m), -cheb_T(2, m), cheb_T(3, m), cheb_T(4, m)]
            np.testing.assert_allclose(eigenvector(spec, k), expected, atol=1e-15)

    def test_dagger_n3_k1(self):
        spec = FamilySpec(AD, 3, 2 - 1j, 0.5 + 1j)
        v = eigenvector(spec, 1)
        np.testing.assert_allclose(v, [0.5, -1, 0.5], atol=1e-15)
        lam = eigenvalues(spec)[0]
        assert lam == pytest.approx(spec.a - spec.b)

    def test_index_range(self):
        with pytest.raises(IndexError):
            eigenvector(FamilySpec(A, 3, 1, 1), 4)
        with pytest.raises(IndexError):
            eigenvector(FamilySpec(A, 3, 1, 1), 0)

    def test_sign_rule_odd_matches_published_rule(self):
        for n in range(3, 25, 2):
            for j in range(1, n + 1):
                published = 1 if j in (1, 2, n - 1, n) else (-1) ** j
                assert eigenvector_sign(j, n) == published

    def test_even_n_published_rule_fails(self):
        # the corner-symmetric sign rule breaks the last eigen-equation for even n
        spec = FamilySpec(A, 6, 1, 1)
        m = build(spec).to_dense()
        k = 2
        node = nodes(spec)[k - 1]
        published = np.array([cheb_T(j - 1, node) * (1 if j in (1, 2, 5, 6) else (-1) ** j) for j in range(1, 7)])
        assert pair_residual(m, published, eigenvalues(spec)[k - 1]) > 1e-3
        assert eigen_residual(spec, k) < 1e-12


class TestResidual:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_example_n3(self, k):
        assert eigen_residual(FamilySpec(A, 3, 1, 3), k) <= 1e-12

    def test_sweep_family_a(self, ab):
        a, b = ab
        for n in range(3, 12, 2):
            spec = FamilySpec(A, n, a, b)
            assert max(eigen_residual(spec, k) for k in range(1, n + 1)) <= 1e-10

    def test_sweep_family_a_even(self, ab):
        a, b = ab
        for n in range(4, 13, 2):
            spec = FamilySpec(A, n, a, b)
            assert max(eigen_residual(spec, k) for k in range(1, n + 1)) <= 1e-10

    def test_sweep_dagger(self, ab):
        a, b = ab
        for n in range(2, 13):
            spec = FamilySpec(AD, n, a, b)
            assert max(eigen_residual(spec, k) for k in range(1, n + 1)) <= 1e-10

    def test_dagger_n7_complex(self):
        spec = FamilySpec(AD, 7, 2 + 1j, 1 - 1j)
        assert max(eigen_residual(spec, k) for k in range(1, 8)) <= 1e-10

    @pytest.mark.parametrize("fam,n", [(A, 3), (A, 5), (AD, 4)])
    def test_perturbed_eigenvalue_detected(self, fam, n):
        spec = FamilySpec(fam, n, 1, 0.5 + 0.5j)
        m = build(spec).to_dense()
        for k in range(1, n + 1):
            lam = eigenvalues(spec)[k - 1] + 0.1
            assert pair_residual(m, eigenvector(spec, k), lam) > 1e-3


@pytest.mark.parametrize("fam,lo", [(A, 3), (AD, 2)])
def test_det_is_eigenvalue_product(fam, lo, ab):
    a, b = ab
    for n in range(lo, 16):
        spec = FamilySpec(fam, n, a, b)
        det = tridiag_det(build(spec))
        prod = np.prod(eigenvalues(spec))
        assert abs(det - prod) <= 1e-9 * max(abs(prod), 1e-300)
