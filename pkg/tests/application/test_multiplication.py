"""
Multiplication Operator Tests
𝒞⁰/𝒞¹ çarpımı, K sınırı, weak-* salınımlar ve fonksiyonel bataryası
"""

import numpy as np
import pytest

from src.application.services.multiplication import (
    apply_mult,
    sup_bound_K,
    weakstar_functionals,
    weakstar_oscillate,
)
from src.domain import (
    AssumptionViolation,
    Exponent,
    GridFunction,
    GridMismatchError,
    MatrixSample,
    SampleBox,
    SpatialGrid,
    ValidationError,
    lp_norm,
    matrix_norm,
)
from tests.conftest import make_parameter


@pytest.fixture
def unit_box():
    """(0,1) üzerinde 10 hücre, [0,1] içinde 201 zaman noktası"""
    grid = SpatialGrid(((0.0, 1.0),), (10,))
    return SampleBox(grid, np.linspace(0.0, 1.0, 201))


class TestApplyMult:
    """apply_mult testleri"""

    def test_constant_matrix(self):
        """(𝒞u)^k = Σ_l c^{kl} u^l"""
        grid = SpatialGrid(((0.0, 1.0),), (3,))
        a = make_parameter([[0.5, 0], [1, 2]], [[0, 0], [0, 0]])
        u = GridFunction(grid, np.array([[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]]))

        result = apply_mult(a, 0, 0.0, u)

        assert np.allclose(result.values, [[0.5, 1.0, 1.5], [9.0, 12.0, 15.0]])
        assert np.allclose(apply_mult(a, 1, 0.0, u).values, 0.0)

    def test_space_dependent_coefficient(self):
        """c(x) = x1 noktasal çarpım"""
        grid = SpatialGrid(((0.0, 1.0),), (4,))
        a = make_parameter([["x1"]], [["0"]])
        u = GridFunction(grid, np.ones(4))

        result = apply_mult(a, 0, 0.0, u)

        assert np.allclose(result.values[0], grid.coordinates["x1"])

    def test_component_mismatch(self):
        """Bileşen sayısı uyuşmazlığı"""
        grid = SpatialGrid(((0.0, 1.0),), (3,))
        a = make_parameter([[0, 0], [0, 0]], [[0, 0], [0, 0]])

        with pytest.raises(GridMismatchError):
            apply_mult(a, 0, 0.0, GridFunction(grid, np.zeros(3)))

    @pytest.mark.parametrize("p", ["1", "2", "4", "inf"])
    def test_ratio_bounded_by_matrix_norm(self, p):
        """‖𝒞u‖_p / ‖u‖_p ≤ ‖c‖_{p′,p} rastgele u için"""
        grid = SpatialGrid(((0.0, 1.0),), (16,))
        a = make_parameter([["x1", "-0.5"], ["0.3", "cos(x1)"]], [["0", "2*x1"], ["-1", "0"]], K_bound=2.0)
        rng = np.random.default_rng(11)
        exponent = Exponent.parse(p)

        for i in (0, 1):
            bound = matrix_norm(MatrixSample.from_fields(a.coupling_fields(i, 0.0, grid)), exponent.conjugate(), exponent)
            for _ in range(20):
                u = GridFunction(grid, rng.normal(size=(2, 16)))
                ratio = lp_norm(apply_mult(a, i, 0.0, u), exponent) / lp_norm(u, exponent)
                assert ratio <= bound + 1e-12


class TestSupBoundK:
    """sup_bound_K testleri"""

    def test_max_over_entries_and_operators(self, unit_box):
        """Tüm girdiler ve iki operatör üzerinde supremum"""
        a = make_parameter([["-0.7"]], [["0.3"]])
        b = make_parameter([["0.1"]], [["0.5 * sin(t)"]])

        assert sup_bound_K([a, b], unit_box) == pytest.approx(0.7)
        assert sup_bound_K([b], unit_box) == pytest.approx(0.5 * np.sin(1.0))

    def test_empty_batch(self, unit_box):
        """Boş batch reddedilir"""
        with pytest.raises(ValidationError):
            sup_bound_K([], unit_box)


class TestWeakStarOscillate:
    """weakstar_oscillate testleri"""

    def test_zero_amplitude_returns_base(self):
        """amp = 0: temel nokta aynen döner"""
        base = make_parameter([["0.2"]], [["-0.2"]])

        assert weakstar_oscillate(base, 4, 0.0) is base

    def test_time_mode_values(self, unit_box):
        """c + amp·sin(2πm·t)"""
        base = make_parameter([["0.2"]], [["-0.2"]])
        perturbed = weakstar_oscillate(base, 1, 0.1, mode="time")
        grid = unit_box.grid

        assert np.allclose(perturbed.c0[0][0].sample(0.25, grid), 0.3)
        assert np.allclose(perturbed.c1[0][0].sample(0.75, grid), -0.3)
        assert perturbed.components == base.components

    def test_space_mode_values(self, unit_box):
        """c + amp·sin(2πm·x1)"""
        base = make_parameter([["0"]], [["0"]])
        grid = unit_box.grid
        perturbed = weakstar_oscillate(base, 2, 0.1, mode="space", targets=("c0",))

        expected = 0.1 * np.sin(4.0 * np.pi * grid.coordinates["x1"])
        assert np.allclose(perturbed.c0[0][0].sample(0.0, grid), expected)
        assert np.allclose(perturbed.c1[0][0].sample(0.0, grid), 0.0)

    def test_constant_mode(self, unit_box):
        """Sabit kaydırma: weak-* sıfır olmayan kontrol"""
        base = make_parameter([["0.2"]], [["0"]])
        perturbed = weakstar_oscillate(base, 3, 0.1, mode="constant")

        assert np.allclose(perturbed.c0[0][0].sample(0.5, unit_box.grid), 0.3)

    def test_exceeding_K_rejected(self, unit_box):
        """Pertürbe nokta K sınırını aşarsa DA2"""
        base = make_parameter([["0.2"]], [["0"]], K_bound=0.25)

        with pytest.raises(AssumptionViolation) as exc:
            weakstar_oscillate(base, 1, 0.1, box=unit_box)
        assert exc.value.assumption == "DA2"

    def test_invalid_arguments(self):
        """Geçersiz mod, m veya hedef"""
        base = make_parameter([["0"]], [["0"]])

        with pytest.raises(ValidationError):
            weakstar_oscillate(base, 1, 0.1, mode="chirp")
        with pytest.raises(ValidationError):
            weakstar_oscillate(base, 0, 0.1)
        with pytest.raises(ValidationError):
            weakstar_oscillate(base, 1, 0.1, targets=("a",))


class TestWeakStarFunctionals:
    """weakstar_functionals testleri"""

    def test_constant_shift_does_not_vanish(self, unit_box):
        """⟨amp, 1⟩ = amp·|D|·süre"""
        base = make_parameter([["0.2"]], [["0"]])
        perturbed = weakstar_oscillate(base, 1, 0.1, mode="constant")

        values = weakstar_functionals(base, perturbed, unit_box)

        assert values.shape == (10,)
        assert values[0] == pytest.approx(0.1)

    def test_time_oscillation_decays(self, unit_box):
        """Tam periyotta ⟨sin, 1⟩ = 0; ⟨sin, s⟩ m ile küçülür"""
        base = make_parameter([["0"]], [["0"]])
        slow = weakstar_functionals(base, weakstar_oscillate(base, 1, 0.1), unit_box)
        fast = weakstar_functionals(base, weakstar_oscillate(base, 8, 0.1), unit_box)

        assert abs(slow[0]) < 1e-12
        assert slow[1] == pytest.approx(-0.1 / (2.0 * np.pi), rel=1e-2)
        assert abs(fast[1]) < abs(slow[1]) / 4.0


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
