"""
Form Assembly Tests
Hücre merkezli rijitlik matrisi: sınır terimleri, simetri ve DA4 kontrolü
"""

import numpy as np
import pytest

from src.domain import AssumptionViolation, ComponentCoefficients, GridMismatchError, SpatialGrid
from src.infrastructure.expressions import parse_expr
from src.infrastructure.numerics import assemble_form


def component(bc="dirichlet", a=(("1",),), a_first=None, b_first=None, d0="0"):
    dim = len(a)
    return ComponentCoefficients(
        bc=bc,
        a=[[parse_expr(e) for e in row] for row in a],
        a_first=[parse_expr(e) for e in (a_first or ["0"] * dim)],
        b_first=[parse_expr(e) for e in (b_first or ["0"] * dim)],
        d0=parse_expr(d0),
    )


UNIT_1D = SpatialGrid(((0.0, 1.0),), (4,))
UNIT_2D = SpatialGrid(((0.0, 1.0), (0.0, 2.0)), (4, 5))


class TestOneDimensional:
    """N = 1 montajı"""

    def test_dirichlet_stencil(self):
        """h = 1/4: köşegen [12, 8, 8, 12], yan köşegen −4"""
        S = assemble_form(component(), 0.0, UNIT_1D).stiffness.toarray()

        assert np.allclose(np.diag(S), [12.0, 8.0, 8.0, 12.0])
        assert np.allclose(np.diag(S, 1), -4.0)
        assert np.allclose(S, S.T)

    def test_neumann_annihilates_constants(self):
        """Neumann: B[1, v] = 0"""
        form = assemble_form(component(bc="neumann"), 0.0, UNIT_1D)

        assert np.allclose(form.stiffness @ np.ones(4), 0.0)

    def test_robin_boundary_term(self):
        """Robin: B[1, 1] = Σ_sınır d₀"""
        form = assemble_form(component(bc="robin", d0="2"), 0.0, UNIT_1D)

        assert form.value(np.ones(4), np.ones(4)) == pytest.approx(4.0)

    def test_first_order_terms_break_symmetry(self):
        """a_i ≠ 0 iken S simetrik değildir"""
        S = assemble_form(component(a_first=["1"]), 0.0, UNIT_1D).stiffness.toarray()

        assert not np.allclose(S, S.T)

    def test_operator_scaling(self):
        """A = S / V ve bant genişliği 1"""
        form = assemble_form(component(), 0.0, UNIT_1D)

        assert np.allclose(form.operator.toarray(), form.stiffness.toarray() / 0.25)
        assert form.bandwidth == 1

    def test_negative_diffusion_rejected(self):
        """a ≤ 0: DA4"""
        with pytest.raises(AssumptionViolation) as exc:
            assemble_form(component(a=(("-1",),)), 0.0, UNIT_1D)
        assert exc.value.assumption == "DA4"

    def test_dimension_mismatch(self):
        """Katsayı boyutu ızgarayla uyuşmalı"""
        with pytest.raises(GridMismatchError):
            assemble_form(component(), 0.0, UNIT_2D)


class TestTwoDimensional:
    """N = 2 montajı"""

    def test_cross_diffusion_symmetric(self):
        """a₁₂ = a₂₁: S simetrik ve Neumann'da sabitleri yok eder"""
        a = (("1", "0.3"), ("0.3", "1"))
        form = assemble_form(component(bc="neumann", a=a), 0.0, UNIT_2D)
        S = form.stiffness.toarray()

        assert np.allclose(S, S.T)
        assert np.allclose(S @ np.ones(UNIT_2D.size), 0.0)

    def test_dirichlet_positive_definite(self):
        """Dirichlet: en küçük özdeğer pozitif"""
        a = (("2", "0.2"), ("0.2", "1"))
        S = assemble_form(component(a=a), 0.0, UNIT_2D).stiffness.toarray()

        assert np.min(np.linalg.eigvalsh(S)) > 0.0

    def test_asymmetric_diffusion_rejected(self):
        """a₁₂ ≠ a₂₁: DA4"""
        with pytest.raises(AssumptionViolation):
            assemble_form(component(a=(("1", "0.2"), ("0.1", "1"))), 0.0, UNIT_2D)

    def test_indefinite_diffusion_rejected(self):
        """Pozitif tanımlı olmayan difüzyon matrisi: DA4"""
        with pytest.raises(AssumptionViolation):
            assemble_form(component(a=(("1", "2"), ("2", "1"))), 0.0, UNIT_2D)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
