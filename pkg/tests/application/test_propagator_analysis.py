"""
Propagator Analysis Tests
(M, γ) uydurması, operatör normu ölçümü ve düzleştirme eğimi
"""

import math

import numpy as np
import pytest

from src.application.services.propagator_analysis import (
    OperatorNormSample,
    cocycle_check,
    estimate_M_gamma,
    fit_M_gamma,
    fit_smoothing_slope,
    measure_operator_norms,
    smoothing_exponent,
)
from src.domain import Scheme, SpatialGrid, TimeGrid, ValidationError
from src.infrastructure.numerics import EvolutionFamily
from tests.conftest import make_parameter


class TestFitMGamma:
    """fit_M_gamma testleri"""

    def test_no_samples(self):
        """Örnek yoksa (1, 0)"""
        assert fit_M_gamma([], 0.0) == (1.0, 0.0)

    def test_decaying_ratios(self):
        """Daralan oranlar: M = 1, γ = 0"""
        samples = [OperatorNormSample(span=t, ratio=math.exp(-t)) for t in (0.1, 0.5, 1.0, 2.0)]
        M, gamma = fit_M_gamma(samples, 0.0)

        assert M == pytest.approx(1.0, abs=1e-8)
        assert gamma == pytest.approx(0.0, abs=1e-8)

    def test_growth_is_dominated(self):
        """Uydurulan sınır her örneğin üstündedir"""
        samples = [OperatorNormSample(span=t, ratio=2.0 * math.exp(0.5 * t)) for t in np.linspace(0.1, 1.0, 10)]
        M, gamma = fit_M_gamma(samples, 0.0)

        assert M >= 1.0 and gamma >= 0.0
        for s in samples:
            assert s.ratio <= M * math.exp(gamma * s.span) * (1.0 + 1e-7)

    def test_singular_factor(self):
        """δ > 0 iken τ^{−δ} çarpanı hesaba katılır"""
        samples = [OperatorNormSample(span=t, ratio=t ** -0.5) for t in (0.01, 0.1, 1.0)]
        M, gamma = fit_M_gamma(samples, 0.5)

        assert M == pytest.approx(1.0, abs=1e-8)
        assert gamma == pytest.approx(0.0, abs=1e-8)


class TestSmoothingExponent:
    """δ = N/2·(1/p − 1/q)"""

    def test_values(self):
        assert smoothing_exponent(1, "1", "inf") == pytest.approx(0.5)
        assert smoothing_exponent(2, "2", "inf") == pytest.approx(0.5)
        assert smoothing_exponent(2, "2", "2") == 0.0


class TestOperatorNorms:
    """Ölçülen normlar ve (M, γ)"""

    def test_heat_is_l2_contraction(self, small_heat):
        """Dirichlet ısı ailesi L₂'de daraltır: M ≈ 1, γ ≈ 0"""
        M, gamma = estimate_M_gamma(small_heat.family, "2", "2", samples=3, seed=1)

        assert M == pytest.approx(1.0, abs=1e-6)
        assert gamma == pytest.approx(0.0, abs=1e-6)

    def test_measured_ratios_bounded(self, small_heat):
        """Tüm L₂ oranları ≤ 1"""
        samples = measure_operator_norms(small_heat.family, "2", "2", samples=2, seed=0)

        assert samples
        assert all(s.span > 0 for s in samples)
        assert max(s.ratio for s in samples) <= 1.0 + 1e-10

    def test_invalid_requests(self, small_heat):
        """p > q veya örnek yok"""
        with pytest.raises(ValidationError):
            measure_operator_norms(small_heat.family, "inf", "1", samples=2)
        with pytest.raises(ValidationError):
            measure_operator_norms(small_heat.family, "2", "2", samples=0)


class TestSmoothingSlope:
    """fit_smoothing_slope testleri"""

    def test_heat_kernel_slope(self, heat_setup):
        """N = 1 ısı çekirdeği: eğim ≈ −1/2"""
        family = EvolutionFamily.for_parameter(
            heat_setup.parameter,
            heat_setup.grid,
            TimeGrid(0.0, 0.1, 1e-3),
            Scheme.IMPLICIT_EULER,
        )

        slope = fit_smoothing_slope(family, 0.01, 0.1)

        assert slope == pytest.approx(-0.5, abs=0.05)

    def test_two_dimensional_slope(self):
        """N = 2 ısı çekirdeği: eğim ≈ −1 (%10 içinde)"""
        grid = SpatialGrid(((0.0, 2.0), (0.0, 2.0)), (80, 80))
        parameter = make_parameter([[0]], [[0]], dim=2)
        family = EvolutionFamily.for_parameter(parameter, grid, TimeGrid(0.0, 0.1, 5e-4), Scheme.IMPLICIT_EULER)

        slope = fit_smoothing_slope(family, 0.01, 0.1)

        assert slope == pytest.approx(-1.0, abs=0.1)

    def test_window_must_start_after_zero(self, small_heat):
        """t_lo = 0 reddedilir"""
        with pytest.raises(ValidationError):
            fit_smoothing_slope(small_heat.family, 0.0, 1.0)


class TestCocycleCheck:
    """cocycle_check ön koşulları"""

    def test_time_order(self, small_heat):
        """s ≤ t₁ ≤ t₂ sağlanmalı"""
        with pytest.raises(ValidationError):
            cocycle_check(small_heat.family, 1.0, 0.5, 1.5, small_heat.history.head)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
