import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plate_spectra.errors import (
    DimensionMismatchError,
    NoSignChangeError,
    NonFiniteError,
    NotPositiveDefiniteError,
    OrderOutOfRangeError,
)
from plate_spectra.numerics import (
    Interval,
    SymmetricMatrix,
    bisect_root,
    gauss_legendre,
    sym_eigs,
    sym_gen_eigs,
)


class TestInterval:
    def test_width_and_midpoint(self):
        iv = Interval(1.0, 3.0)
        assert iv.width() == 2.0
        assert iv.midpoint() == 2.0
        assert iv.contains(2.5)
        assert not iv.contains(3.1)

    def test_rejects_inverted_endpoints(self):
        with pytest.raises(ValueError):
            Interval(2.0, 1.0)

    def test_rejects_non_finite(self):
        with pytest.raises(NonFiniteError):
            Interval(0.0, math.inf)

    @given(st.floats(-1e12, 1e12), st.floats(0.0, 1e12))
    def test_width_nonnegative(self, lo, width):
        iv = Interval(lo, lo + width)
        assert iv.width() >= 0.0


class TestBisectRoot:
    def test_sqrt_two(self):
        iv = bisect_root(lambda x: x * x - 2.0, Interval(1.0, 2.0), tol=1e-12)
        assert iv.width() <= 1e-12
        assert iv.contains(math.sqrt(2.0))

    def test_beam_frequency_equation(self):
        # cos(w)cosh(w) = 1 has its first positive root near 4.73004.
        iv = bisect_root(
            lambda w: math.cos(w) * math.cosh(w) - 1.0, Interval(4.0, 5.0), tol=1e-10
        )
        assert iv.width() <= 1e-10
        assert f"{iv.midpoint():.6g}" == "4.73004"

    def test_odd_function(self):
        iv = bisect_root(lambda x: x, Interval(-1.0, 1.0), tol=1e-10)
        assert iv.contains(0.0)

    def test_no_sign_change_raises(self):
        with pytest.raises(NoSignChangeError):
            bisect_root(lambda x: x * x + 1.0, Interval(-1.0, 1.0), tol=1e-8)

    def test_non_finite_raises(self):
        with pytest.raises(NonFiniteError):
            bisect_root(lambda x: math.nan, Interval(-1.0, 1.0), tol=1e-8)

    def test_bad_tol_raises(self):
        with pytest.raises(ValueError):
            bisect_root(lambda x: x, Interval(-1.0, 1.0), tol=0.0)

    @settings(max_examples=60, deadline=None)
    @given(st.floats(-100.0, 100.0), st.floats(1e-6, 10.0))
    def test_returned_interval_retains_sign_change(self, root, halfspan):
        f = lambda x: (x - root) * (1.0 + abs(x - root))
        iv = bisect_root(f, Interval(root - halfspan, root + halfspan), tol=1e-9)
        assert f(iv.lo) * f(iv.hi) <= 0.0
        assert iv.contains(root)


class TestGaussLegendre:
    def test_order_one_is_midpoint_rule(self):
        rule = gauss_legendre(1)
        assert rule.nodes == pytest.approx([0.0])
        assert rule.weights == pytest.approx([2.0])

    def test_order_two(self):
        rule = gauss_legendre(2)
        assert rule.nodes == pytest.approx([-1.0 / math.sqrt(3), 1.0 / math.sqrt(3)])
        assert rule.weights == pytest.approx([1.0, 1.0])

    def test_high_even_monomial(self):
        # Order 20 integrates degree-39 polynomials; int_-1^1 x^38 dx = 2/39.
        rule = gauss_legendre(20)
        value = rule.integrate(lambda x: x**38)
        assert abs(value - 2.0 / 39.0) <= 1e-13

    @pytest.mark.parametrize("order", [1, 2, 3, 5, 8, 13, 20, 32, 64, 128, 256])
    def test_exactness_through_degree(self, order):
        rule = gauss_legendre(order)
        degrees = np.arange(2 * order)
        powers = rule.nodes[None, :] ** degrees[:, None]
        computed = powers @ rule.weights
        exact = np.where(degrees % 2 == 1, 0.0, 2.0 / (degrees + 1.0))
        tol = 1e-12 * np.maximum(1.0, np.abs(exact))
        assert np.all(np.abs(computed - exact) <= tol)

    @pytest.mark.parametrize("order", [1, 4, 17, 64, 256])
    def test_rule_invariants(self, order):
        rule = gauss_legendre(order)
        assert abs(float(np.sum(rule.weights)) - 2.0) <= 1e-13
        assert np.all(rule.weights > 0.0)
        assert np.all(np.diff(rule.nodes) > 0.0)
        assert np.all((rule.nodes > -1.0) & (rule.nodes < 1.0))

    @pytest.mark.parametrize("order", [0, -3, 257])
    def test_order_out_of_range(self, order):
        with pytest.raises(OrderOutOfRangeError):
            gauss_legendre(order)

    def test_mapped_integration(self):
        rule = gauss_legendre(6)
        assert rule.integrate(lambda x: x**2, 0.0, 3.0) == pytest.approx(9.0, rel=1e-13)


class TestSymmetricMatrix:
    def test_round_trip(self):
        rng = np.random.default_rng(7)
        a = rng.standard_normal((6, 6))
        a = 0.5 * (a + a.T)
        packed = SymmetricMatrix.from_dense(a)
        assert np.allclose(packed.to_dense(), a)

    def test_rejects_non_square(self):
        with pytest.raises(DimensionMismatchError):
            SymmetricMatrix.from_dense(np.zeros((2, 3)))

    def test_rejects_bad_packed_length(self):
        with pytest.raises(DimensionMismatchError):
            SymmetricMatrix(n=3, packed=np.zeros(5))


class TestSymEigs:
    def test_diagonal(self):
        assert sym_eigs(np.diag([3.0, 1.0, 2.0]), 3) == pytest.approx([1.0, 2.0, 3.0])

    def test_two_by_two(self):
        assert sym_eigs(np.array([[2.0, 1.0], [1.0, 2.0]]), 2) == pytest.approx([1.0, 3.0])

    def test_tridiagonal_closed_form(self):
        # tridiag(-1, 2, -1) of size n has eigenvalues 4 sin^2(j pi / (2n+2)).
        n = 10
        a = 2.0 * np.eye(n) - np.eye(n, k=1) - np.eye(n, k=-1)
        smallest = sym_eigs(SymmetricMatrix.from_dense(a), 1)[0]
        assert abs(smallest - 4.0 * math.sin(math.pi / 22.0) ** 2) <= 1e-10

    def test_ascending_under_orthogonal_similarity(self):
        rng = np.random.default_rng(11)
        for n in (3, 8, 20):
            a = rng.standard_normal((n, n))
            a = 0.5 * (a + a.T)
            q, _ = np.linalg.qr(rng.standard_normal((n, n)))
            rotated = q @ a @ q.T
            base = sym_eigs(a, n)
            assert base == sorted(base)
            scale = max(1.0, float(np.linalg.norm(a, 2)))
            assert np.allclose(sym_eigs(rotated, n), base, atol=1e-9 * scale)

    def test_residual_contract(self):
        rng = np.random.default_rng(3)
        a = rng.standard_normal((40, 40))
        a = 0.5 * (a + a.T)
        vals = sym_eigs(a, 5)
        w, v = np.linalg.eigh(a)
        norm_a = float(np.linalg.norm(a, 2))
        for i, lam in enumerate(vals):
            assert lam == pytest.approx(w[i], abs=1e-12 * max(1.0, norm_a))
            residual = np.linalg.norm(a @ v[:, i] - w[i] * v[:, i])
            assert residual <= 1e-9 * norm_a

    def test_count_out_of_range(self):
        with pytest.raises(DimensionMismatchError):
            sym_eigs(np.eye(3), 4)


class TestSymGenEigs:
    def test_diagonal_pencil(self):
        vals = sym_gen_eigs(np.diag([2.0, 6.0]), np.diag([1.0, 2.0]), 2)
        assert vals == pytest.approx([2.0, 3.0])

    def test_identity_mass_matches_sym_eigs(self):
        rng = np.random.default_rng(5)
        a = rng.standard_normal((7, 7))
        a = a @ a.T + 7.0 * np.eye(7)
        assert sym_gen_eigs(a, np.eye(7), 7) == pytest.approx(sym_eigs(a, 7), rel=1e-10)

    def test_against_characteristic_polynomial_roots(self):
        # Oracle: interpolate det(A - x B) (degree-5 polynomial, LU-based
        # determinants) and take its real roots.
        rng = np.random.default_rng(17)
        n = 5
        m = rng.standard_normal((n, n))
        a = m @ m.T + 0.5 * np.eye(n)
        m2 = rng.standard_normal((n, n))
        b = m2 @ m2.T + n * np.eye(n)
        sample = np.linspace(-1.0, 6.0, n + 1)
        dets = [np.linalg.det(a - x * b) for x in sample]
        coeffs = np.polyfit(sample, dets, n)
        roots = np.sort(np.roots(coeffs).real)
        vals = sym_gen_eigs(a, b, n)
        assert np.allclose(vals, roots, rtol=1e-8, atol=1e-8)

    def test_not_positive_definite_raises(self):
        with pytest.raises(NotPositiveDefiniteError):
            sym_gen_eigs(np.eye(2), np.diag([1.0, -1.0]), 1)

    def test_dimension_mismatch_raises(self):
        with pytest.raises(DimensionMismatchError):
            sym_gen_eigs(np.eye(3), np.eye(2), 1)
