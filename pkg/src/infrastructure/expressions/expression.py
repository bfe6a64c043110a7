"""
Expression
CoeffExpr implementasyonu: AST + vektörize numpy değerlendirici.
"""

from dataclasses import dataclass
from typing import FrozenSet, Mapping, Union

import numpy as np

from ...domain.coefficients import CoeffExpr
from ...domain.exceptions import UnknownIdentifierError
from .nodes import BinaryOp, Call, Node, Number, Variable, free_variables, to_source
from .parser import parse_tree


_UNARY = {
    "sin": np.sin,
    "cos": np.cos,
    "exp": np.exp,
    "abs": np.abs,
    "sign": np.sign,
}
_BINARY = {
    "min": np.minimum,
    "max": np.maximum,
}
_OPERATORS = {
    "+": np.add,
    "-": np.subtract,
    "*": np.multiply,
    "/": np.divide,
    "^": np.power,
}


def evaluate_node(node: Node, t: float, coords: Mapping[str, np.ndarray]):
    """AST'yi numpy ile değerlendir; skaler veya yayınlanabilir dizi döner"""
    if isinstance(node, Number):
        return node.value
    if isinstance(node, Variable):
        if node.name == "t":
            return float(t)
        if node.name not in coords:
            raise UnknownIdentifierError(f"Bu ızgarada tanımsız değişken: '{node.name}'", 0)
        return coords[node.name]
    if isinstance(node, BinaryOp):
        left = np.asarray(evaluate_node(node.left, t, coords), dtype=float)
        right = np.asarray(evaluate_node(node.right, t, coords), dtype=float)
        return _OPERATORS[node.op](left, right)
    if isinstance(node, Call):
        args = [np.asarray(evaluate_node(a, t, coords), dtype=float) for a in node.args]
        if node.func in _UNARY:
            return _UNARY[node.func](args[0])
        return _BINARY[node.func](args[0], args[1])
    raise TypeError(f"Bilinmeyen düğüm: {node!r}")


@dataclass(frozen=True)
class Expression(CoeffExpr):
    """Ayrıştırılmış, değişmez katsayı ifadesi"""

    node: Node

    @property
    def source(self) -> str:
        return to_source(self.node)

    def evaluate(self, t: float, coords: Mapping[str, np.ndarray]) -> np.ndarray:
        with np.errstate(all="ignore"):
            return np.asarray(evaluate_node(self.node, t, coords), dtype=float)

    def free_variables(self) -> FrozenSet[str]:
        return free_variables(self.node)

    def __str__(self) -> str:
        return self.source


def parse_expr(source: str) -> Expression:
    """Metinden Expression oluştur"""
    return Expression(parse_tree(source))


def constant(value: float) -> Expression:
    return Expression(Number(float(value)))


def shifted(base: CoeffExpr, amplitude: float, oscillation: Union[str, Node]) -> Expression:
    """base + amp·oscillation (ör. sin(2πm·t)); base AST'si korunur"""
    base_node = base.node if isinstance(base, Expression) else parse_tree(base.source)
    osc = parse_tree(oscillation) if isinstance(oscillation, str) else oscillation
    return Expression(BinaryOp("+", base_node, BinaryOp("*", Number(float(amplitude)), osc)))
