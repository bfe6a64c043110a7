"""
Norm Tests
Ayrık L_p normları, dualite eşlemesi ve geçmiş normu testleri
"""

import math

import numpy as np
import pytest

from src.domain import (
    GridFunction,
    GridMismatchError,
    HistorySegment,
    SpatialGrid,
    TimeGrid,
    Trajectory,
    ValidationError,
    duality_pairing,
    history_norm,
    initial_datum_norm,
    lp_norm,
    traj_sup_norm,
)


@pytest.fixture
def unit_grid():
    return SpatialGrid(((0.0, 1.0),), (4,))


class TestLpNorm:
    """lp_norm testleri"""

    def test_constant_function(self, unit_grid):
        """Sabit fonksiyon: ‖c‖_p = |c|·|D|^{1/p}"""
        u = GridFunction(unit_grid, np.full(4, -3.0))

        assert lp_norm(u, 1) == pytest.approx(3.0)
        assert lp_norm(u, 2) == pytest.approx(3.0)
        assert lp_norm(u, "inf") == pytest.approx(3.0)

    def test_sine_l2(self):
        """Hücre merkezlerinde sin'in ayrık L2 normu √(π/2)"""
        grid = SpatialGrid(((0.0, math.pi),), (50,))
        u = GridFunction(grid, np.sin(grid.coordinates["x1"]))

        assert lp_norm(u, 2) == pytest.approx(math.sqrt(math.pi / 2), rel=1e-12)

    def test_components_summed(self, unit_grid):
        """Bileşenler tek bir toplamda birleşir"""
        u = GridFunction(unit_grid, np.stack([np.ones(4), np.ones(4)]))

        assert lp_norm(u, 2) == pytest.approx(math.sqrt(2.0))
        assert lp_norm(u, 1) == pytest.approx(2.0)

    def test_invalid_exponent(self, unit_grid):
        """p < 1 reddedilir"""
        with pytest.raises(ValidationError):
            lp_norm(GridFunction.zeros(unit_grid, 1), 0.5)

    @pytest.mark.parametrize("q", [64, 128, 512])
    @pytest.mark.parametrize("amplitude", [1e-3, 1e3])
    def test_large_exponent_keeps_scale(self, q, amplitude):
        """Büyük q'da sabit fonksiyonun normu ne sıfıra düşer ne taşar"""
        grid = SpatialGrid(((0.0, 1.0),), (8,))
        u = GridFunction(grid, np.full(8, amplitude))

        assert lp_norm(u, q) == pytest.approx(amplitude, rel=1e-12)

    def test_converges_to_sup_norm(self):
        """q → ∞ iken ‖u‖_q artarak ‖u‖_∞'a yaklaşır (|D| = 1)"""
        grid = SpatialGrid(((0.0, 1.0),), (64,))
        u = GridFunction(grid, np.sin(math.pi * grid.coordinates["x1"]))
        sup = lp_norm(u, "inf")
        norms = [lp_norm(u, q) for q in (2, 8, 32, 128, 512)]

        assert all(a <= b * (1 + 1e-12) for a, b in zip(norms, norms[1:]))
        assert all(n <= sup * (1 + 1e-12) for n in norms)
        assert sup - norms[-1] < 0.01
        assert sup - norms[-1] < sup - norms[2]

    def test_holder_embedding(self):
        """p ≤ q için ‖u‖_p ≤ |D|^{1/p − 1/q}·‖u‖_q"""
        grid = SpatialGrid(((0.0, 2.0),), (40,))
        rng = np.random.default_rng(7)
        exponents = [1.0, 1.5, 2.0, 4.0, 16.0, math.inf]
        for _ in range(10):
            u = GridFunction(grid, rng.normal(size=(2, 40)))
            for i, p in enumerate(exponents):
                for q in exponents[i:]:
                    factor = grid.measure ** (1.0 / p - (0.0 if math.isinf(q) else 1.0 / q))
                    assert lp_norm(u, p) <= factor * lp_norm(u, q) * (1 + 1e-12)


class TestDualityPairing:
    """duality_pairing testleri"""

    def test_pairing(self, unit_grid):
        """⟨1, 2⟩ = 2·|D|"""
        u = GridFunction(unit_grid, np.ones(4))
        v = GridFunction(unit_grid, np.full(4, 2.0))

        assert duality_pairing(u, v) == pytest.approx(2.0)

    def test_component_mismatch(self, unit_grid):
        """Farklı bileşen sayısı"""
        u = GridFunction.zeros(unit_grid, 1)
        v = GridFunction.zeros(unit_grid, 2)

        with pytest.raises(GridMismatchError):
            duality_pairing(u, v)

    def test_holder_inequality(self, unit_grid):
        """|⟨u, v⟩| ≤ ‖u‖_p·‖v‖_{p′}"""
        rng = np.random.default_rng(3)
        pairs = [(1, "inf"), (1.5, 3), (2, 2), (4, 4.0 / 3.0), ("inf", 1)]
        for _ in range(20):
            u = GridFunction(unit_grid, rng.normal(size=4))
            v = GridFunction(unit_grid, rng.normal(size=4))
            for p, p_conj in pairs:
                bound = lp_norm(u, p) * lp_norm(v, p_conj)
                assert abs(duality_pairing(u, v)) <= bound * (1 + 1e-12)


class TestHistoryNorm:
    """history_norm ve initial_datum_norm testleri"""

    def test_constant_history_all_r(self, unit_grid):
        """Sabit geçmiş için her r'de aynı değer (|(-1,0)| = 1)"""
        h = HistorySegment.constant(GridFunction(unit_grid, np.full(4, 2.0)), 0.1)

        assert history_norm(h, "inf", 2) == pytest.approx(2.0)
        assert history_norm(h, 2, 2) == pytest.approx(2.0)
        assert history_norm(h, 1, "inf") == pytest.approx(2.0)

    def test_initial_datum_norm_sums(self, unit_grid):
        """Çarpım uzayı normu iki parçanın toplamıdır"""
        h = HistorySegment.constant(GridFunction(unit_grid, np.ones(4)), 0.25)

        assert initial_datum_norm(h, 2) == pytest.approx(2.0)

    def test_large_r_keeps_scale(self, unit_grid):
        """Büyük r'de zaman normu taşmaz"""
        h = HistorySegment.constant(GridFunction(unit_grid, np.full(4, 1e3)), 0.1)

        assert history_norm(h, 512, 2) == pytest.approx(1e3, rel=1e-12)


class TestTrajSupNorm:
    """traj_sup_norm testleri"""

    def test_window_maximum(self, unit_grid):
        """Pencere içindeki en büyük norm"""
        time_grid = TimeGrid(-1.0, 1.0, 0.5)
        states = np.arange(5.0)[:, None, None] * np.ones((5, 1, 4))
        traj = Trajectory(time_grid, unit_grid, states)

        assert traj_sup_norm(traj, 0.0, 1.0, "inf") == pytest.approx(4.0)
        assert traj_sup_norm(traj, -1.0, 0.0, "inf") == pytest.approx(2.0)

    def test_empty_window(self, unit_grid):
        """t1 < t0 reddedilir"""
        traj = Trajectory(TimeGrid(-1.0, 1.0, 0.5), unit_grid, np.zeros((5, 1, 4)))

        with pytest.raises(ValidationError):
            traj_sup_norm(traj, 0.5, 0.0, 2)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
