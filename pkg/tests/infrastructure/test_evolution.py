"""
Evolution Family Tests
θ-şeması evolüsyon ailesi: özmod sönümü, özdeşlik, cocycle ve dualite
"""

import math

import numpy as np
import pytest

from src.application.services.propagator_analysis import (
    cocycle_check,
    comparison_principle_check,
    duality_defect,
)
from src.domain import (
    AdjointMode,
    GridFunction,
    OffGridTimeError,
    Scheme,
    SpatialGrid,
    TimeGrid,
    ValidationError,
    lp_norm,
)
from src.infrastructure.numerics import EvolutionFamily
from tests.conftest import make_parameter


class TestHeatEigenmode:
    """Isı denklemi özmodu"""

    def test_sine_decays_like_exponential(self, heat_setup):
        """U(1,0) sin ≈ e^{-1} sin"""
        u0 = heat_setup.history.head
        u1 = heat_setup.family.propagate(0.0, 1.0, u0)
        expected = GridFunction(heat_setup.grid, math.exp(-1.0) * u0.values)

        relative = lp_norm(u1 - expected, 2) / lp_norm(expected, 2)
        assert relative <= 1e-3

    def test_two_dimensional_mode(self):
        """N = 2: sin(x₁)sin(x₂) yaklaşık e^{−2t} ile söner"""
        grid = SpatialGrid(((0.0, math.pi), (0.0, math.pi)), (40, 40))
        parameter = make_parameter([[0]], [[0]], dim=2)
        family = EvolutionFamily.for_parameter(parameter, grid, TimeGrid(0.0, 0.5, 0.01))
        u0 = GridFunction(grid, np.sin(grid.coordinates["x1"]) * np.sin(grid.coordinates["x2"]))

        u1 = family.propagate(0.0, 0.5, u0)
        expected = GridFunction(grid, math.exp(-1.0) * u0.values)

        assert lp_norm(u1 - expected, 2) / lp_norm(expected, 2) <= 2e-3

    def test_identity_at_equal_times(self, small_heat):
        """U(s,s) = I"""
        u = small_heat.history.head
        same = small_heat.family.propagate(0.5, 0.5, u)

        assert np.array_equal(same.values, u.values)

    def test_backwards_rejected(self, small_heat):
        """t < s için U(t,s) tanımsız"""
        with pytest.raises(ValidationError):
            small_heat.family.propagate(1.0, 0.5, small_heat.history.head)

    def test_off_grid_rejected(self, small_heat):
        """Izgara dışı zaman"""
        with pytest.raises(OffGridTimeError):
            small_heat.family.propagate(0.0, 0.52, small_heat.history.head)


class TestCocycle:
    """U(t₂,t₁)U(t₁,s) = U(t₂,s)"""

    def test_cocycle_exact(self, small_heat):
        u = GridFunction(small_heat.grid, np.random.default_rng(1).standard_normal(small_heat.grid.shape))

        assert cocycle_check(small_heat.family, 0.0, 0.5, 1.5, u, "2") <= 1e-10
        assert cocycle_check(small_heat.family, 0.25, 0.25, 1.0, u, "inf") <= 1e-10

    def test_order_enforced(self, small_heat):
        """s ≤ t₁ ≤ t₂"""
        with pytest.raises(ValidationError):
            cocycle_check(small_heat.family, 1.0, 0.5, 1.5, small_heat.history.head)


class TestDuality:
    """⟨U(t,s)u, v⟩ = ⟨u, U*(s,t)v⟩"""

    def test_transpose_mode(self, small_heat):
        rng = np.random.default_rng(7)
        u = GridFunction(small_heat.grid, rng.standard_normal(small_heat.grid.shape))
        v = GridFunction(small_heat.grid, rng.standard_normal(small_heat.grid.shape))

        assert duality_defect(small_heat.family, 0.0, 1.0, u, v) <= 1e-10

    def test_rediscretize_self_adjoint(self, small_heat):
        """Simetrik ve zamandan bağımsız katsayılarda iki mod aynı sonucu verir"""
        family = EvolutionFamily.for_parameter(
            small_heat.parameter,
            small_heat.grid,
            small_heat.time_grid,
            adjoint_mode=AdjointMode.REDISCRETIZE,
        )
        rng = np.random.default_rng(3)
        u = GridFunction(small_heat.grid, rng.standard_normal(small_heat.grid.shape))
        v = GridFunction(small_heat.grid, rng.standard_normal(small_heat.grid.shape))

        assert duality_defect(family, 0.0, 1.0, u, v) <= 1e-10


class TestComparisonPrinciple:
    """Örtük Euler pozitifliği korur"""

    def test_nonnegative_preserved(self, small_heat):
        family = EvolutionFamily.for_parameter(
            small_heat.parameter,
            small_heat.grid,
            small_heat.time_grid,
            scheme=Scheme.IMPLICIT_EULER,
        )
        bump = np.zeros(small_heat.grid.shape)
        bump[10] = 1.0

        assert comparison_principle_check(family, GridFunction(small_heat.grid, bump)) >= 0.0

    def test_negative_datum_rejected(self, small_heat):
        with pytest.raises(ValidationError):
            comparison_principle_check(small_heat.family, GridFunction(small_heat.grid, -np.ones(32)))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
