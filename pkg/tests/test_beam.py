import math

import numpy as np
import pytest

from plate_spectra.beam import (
    _first_mode_tension_integral,
    beam_frequency,
    beam_mode,
    characteristic,
    mode_quadrature,
    rho_derivative_check,
    rho_determinant,
    rho_fd_oracle,
    rho_richardson,
)
from plate_spectra.errors import GridTooCoarseError, IndexOutOfRangeError

PI2 = math.pi**2


def _sech(x):
    e = math.exp(-abs(x))
    return 2.0 * e / (1.0 + e * e)


class TestBeamFrequency:
    def test_first_root_six_significant_figures(self):
        assert f"{beam_frequency(1):.6g}" == "4.73004"

    def test_first_root_fourth_power(self):
        assert beam_frequency(1) ** 4 == pytest.approx(500.564, abs=1e-3)

    def test_second_root_bracket_and_residual(self):
        w2 = beam_frequency(2)
        assert 7.0 <= w2 <= 8.5
        assert abs(math.cos(w2) * math.cosh(w2) - 1.0) <= 1e-9

    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_raw_residual_small_modes(self, j):
        # The raw product residual is resolvable in double precision only
        # while cosh stays small; beyond that the scaled test below applies.
        w = beam_frequency(j)
        assert abs(math.cos(w) * math.cosh(w) - 1.0) <= 1e-9

    def test_scaled_residual_and_bracket_all_modes(self):
        for j in range(1, 65):
            w = beam_frequency(j)
            assert abs(math.cos(w) - _sech(w)) <= 1e-12
            center = (j + 0.5) * math.pi
            assert center - 0.4 < w < center + 0.4

    @pytest.mark.parametrize("j", [0, -1, 65])
    def test_index_out_of_range(self, j):
        with pytest.raises(IndexOutOfRangeError):
            beam_frequency(j)


class TestBeamMode:
    @pytest.mark.parametrize("j", [1, 2, 8, 24, 40, 64])
    def test_clamped_endpoints(self, j):
        mode = beam_mode(j)
        for t in (0.0, 1.0):
            assert abs(float(mode.value(t))) <= 1e-8
            assert abs(float(mode.d1(t))) <= 1e-8

    def test_first_mode_bending_energy(self):
        # For an exact eigenfunction, int (X'')^2 = w^4 int X^2.
        mode = beam_mode(1)
        x, w = mode_quadrature(1).mapped_to(0.0, 1.0)
        bending = float(w @ mode.d2(x) ** 2)
        assert bending == pytest.approx(beam_frequency(1) ** 4, abs=1e-8)

    @pytest.mark.parametrize("j", [1, 2, 13, 64])
    def test_unit_l2_norm(self, j):
        mode = beam_mode(j)
        x, w = mode_quadrature(j).mapped_to(0.0, 1.0)
        assert float(w @ mode.value(x) ** 2) == pytest.approx(1.0, abs=1e-10)

    def test_orthogonality_of_distinct_modes(self):
        m1, m2 = beam_mode(1), beam_mode(2)
        x, w = mode_quadrature(2).mapped_to(0.0, 1.0)
        assert abs(float(w @ (m1.value(x) * m2.value(x)))) <= 1e-10

    @pytest.mark.parametrize("j", [1, 2, 3, 4, 5, 6, 24])
    def test_reflection_parity(self, j):
        # Modes alternate symmetric/antisymmetric about t = 1/2.
        mode = beam_mode(j)
        t = np.linspace(0.05, 0.95, 19)
        sign = 1.0 if j % 2 == 1 else -1.0
        assert np.allclose(mode.value(1.0 - t), sign * mode.value(t), atol=1e-9)


class TestRhoDeterminant:
    def test_reduces_to_beam_equation_at_zero_tension(self):
        result = rho_determinant(0.0)
        w14 = beam_frequency(1) ** 4
        assert result.rho == pytest.approx(w14, rel=1e-6)
        assert result.method == "determinant"
        assert result.enclosure.contains(result.rho)
        assert result.enclosure.width() <= 1e-10

    def test_characteristic_sign_structure(self):
        # Positive below the first eigenvalue, negative just above it.
        rho = rho_determinant(PI2).rho
        assert characteristic(rho - 5.0, PI2) > 0.0
        assert characteristic(rho + 5.0, PI2) < 0.0

    def test_monotone_in_tension(self):
        assert rho_determinant(10.0).rho > rho_determinant(5.0).rho

    def test_rayleigh_ceiling(self):
        k1 = _first_mode_tension_integral()
        w14 = beam_frequency(1) ** 4
        for alpha in (0.0, 1.0, PI2, 100.0, PI2 * 16, PI2 * 1296):
            assert rho_determinant(alpha).rho <= w14 + 2.0 * alpha * k1 + 1e-9

    def test_floor_at_unperturbed_value(self):
        w14 = beam_frequency(1) ** 4
        for alpha in (0.0, 0.5, 7.0, 300.0):
            assert rho_determinant(alpha).rho >= w14 - 1e-9

    def test_rejects_negative_tension(self):
        with pytest.raises(ValueError):
            rho_determinant(-1.0)


class TestRhoFdOracle:
    def test_richardson_limit_at_zero_tension(self):
        # Grids 128/256 extrapolate to within 1e-3 of the beam value.
        assert rho_richardson(0.0, 256) == pytest.approx(beam_frequency(1) ** 4, abs=1e-3)

    def test_second_order_convergence(self):
        w14 = beam_frequency(1) ** 4
        err_coarse = abs(rho_fd_oracle(0.0, 128).rho - w14)
        err_fine = abs(rho_fd_oracle(0.0, 256).rho - w14)
        assert 3.5 <= err_coarse / err_fine <= 4.5

    def test_enclosure_and_residual(self):
        result = rho_fd_oracle(PI2, 128)
        assert result.method == "finite-difference"
        assert result.enclosure.contains(result.rho)
        assert result.residual <= 1e-6 * result.rho

    @pytest.mark.parametrize("alpha", [0.0, 1.0, PI2, 100.0, PI2 * 16])
    def test_method_agreement(self, alpha):
        det = rho_determinant(alpha)
        oracle = rho_fd_oracle(alpha, 512)
        assert abs(det.rho - oracle.rho) <= oracle.enclosure.width()

    def test_strong_tension_cross_check(self):
        alpha = PI2 * 16  # aspect sqrt(2) in the rectangle bound
        det = rho_determinant(alpha)
        oracle = rho_fd_oracle(alpha, 512)
        assert oracle.enclosure.contains(det.rho) or abs(det.rho - oracle.rho) <= oracle.enclosure.width()

    def test_grid_too_coarse(self):
        with pytest.raises(GridTooCoarseError):
            rho_fd_oracle(0.0, 16)


class TestDerivativeIdentity:
    def test_sides_agree_at_unit_parameter(self):
        central, variational = rho_derivative_check(1.0)
        assert central == pytest.approx(variational, rel=0.01)

    def test_both_sides_positive(self):
        central, variational = rho_derivative_check(2.0)
        assert central > 0.0
        assert variational > 0.0

    def test_pointwise_monotonicity(self):
        assert rho_determinant(PI2 * 4).rho > rho_determinant(PI2).rho

    def test_rejects_nonpositive_parameter(self):
        with pytest.raises(ValueError):
            rho_derivative_check(0.0)
