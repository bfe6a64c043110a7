"""
Expression Parser Tests
lark grameri, öncelik kuralları ve hata konumları
"""

import numpy as np
import pytest

from src.domain import ExpressionSyntaxError, SpatialGrid, UnknownIdentifierError
from src.infrastructure.expressions import parse_expr, parse_tree, shifted, to_source


def value_of(source: str, t: float = 0.0, x1: float = 0.0) -> float:
    coords = {"x1": np.array([x1]), "x2": np.array([0.0])}
    return float(parse_expr(source).evaluate(t, coords).ravel()[0])


class TestPrecedence:
    """Operatör önceliği ve birleşme"""

    def test_standard_precedence(self):
        """Çarpma toplamadan önce"""
        assert value_of("1 + 2 * 3") == pytest.approx(7.0)
        assert value_of("(1 + 2) * 3") == pytest.approx(9.0)
        assert value_of("8 / 4 / 2") == pytest.approx(1.0)
        assert value_of("5 - 3 - 1") == pytest.approx(1.0)

    def test_power_right_associative(self):
        """2^3^2 = 2^9"""
        assert value_of("2^3^2") == pytest.approx(512.0)

    def test_signed_literal(self):
        """İşaretli sayı sabitleri"""
        assert value_of("-0.5") == pytest.approx(-0.5)
        assert value_of("2 * -3") == pytest.approx(-6.0)
        assert value_of("1e-3") == pytest.approx(1e-3)

    def test_functions(self):
        """İzin verilen fonksiyonlar"""
        assert value_of("min(x1, 1)", x1=3.0) == pytest.approx(1.0)
        assert value_of("max(t, 0)", t=-2.0) == pytest.approx(0.0)
        assert value_of("abs(x1) + sign(x1)", x1=-2.0) == pytest.approx(1.0)
        assert value_of("exp(0) + cos(0) + sin(0)") == pytest.approx(2.0)


class TestErrors:
    """Hata bildirimi"""

    def test_unknown_variable(self):
        """x3 izinli değil"""
        with pytest.raises(UnknownIdentifierError):
            parse_expr("x3 + 1")

    def test_unknown_function(self):
        """tan izinli değil"""
        with pytest.raises(UnknownIdentifierError) as exc:
            parse_expr("1 + tan(x1)")
        assert exc.value.position == 4

    def test_wrong_arity(self):
        """min iki argüman alır"""
        with pytest.raises(ExpressionSyntaxError):
            parse_expr("min(x1)")

    def test_syntax_error_position(self):
        """Beklenmeyen belirteç konumu"""
        with pytest.raises(ExpressionSyntaxError) as exc:
            parse_expr("1 + * 2")
        assert exc.value.position == 4

    def test_unbalanced_parenthesis(self):
        """Kapanmayan parantez"""
        with pytest.raises(ExpressionSyntaxError):
            parse_expr("sin(x1")

    def test_empty(self):
        """Boş ifade"""
        with pytest.raises(ExpressionSyntaxError):
            parse_expr("   ")


class TestExpression:
    """Expression davranışı"""

    def test_canonical_source_reparses(self):
        """Kanonik metin aynı ağacı verir"""
        tree = parse_tree("1 + 2 * x1 ^ 2 - sin(t)")

        assert parse_tree(to_source(tree)) == tree

    def test_free_variables(self):
        """Zaman bağımlılığı serbest değişkenlerden okunur"""
        assert parse_expr("x1 * x2").free_variables() == frozenset({"x1", "x2"})
        assert parse_expr("sin(t)").is_time_dependent
        assert not parse_expr("x1").is_time_dependent

    def test_grid_sampling(self):
        """Izgara örneklemesi hücre merkezlerini kullanır"""
        grid = SpatialGrid(((0.0, 1.0), (0.0, 2.0)), (2, 2))
        values = parse_expr("x1 + x2").sample(0.0, grid)

        assert values.shape == (2, 2)
        assert values[0, 0] == pytest.approx(0.25 + 0.5)

    def test_constant_broadcast(self):
        """Sabit ifade ızgara şekline yayılır"""
        grid = SpatialGrid(((0.0, 1.0),), (5,))

        assert np.allclose(parse_expr("3").sample(1.0, grid), 3.0)

    def test_shifted(self):
        """base + amp·osc"""
        expr = shifted(parse_expr("1"), 0.5, "sin(t)")

        assert value_of(expr.source, t=np.pi / 2) == pytest.approx(1.5)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
