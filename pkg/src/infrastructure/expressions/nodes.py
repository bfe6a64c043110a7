"""
İfade Ağacı (AST)
Katsayı ifadelerinin değişmez düğümleri ve kanonik yazıcı.
"""

from dataclasses import dataclass
from typing import FrozenSet, Tuple, Union


VARIABLES = ("t", "x1", "x2")
FUNCTION_ARITY = {
    "sin": 1,
    "cos": 1,
    "exp": 1,
    "abs": 1,
    "sign": 1,
    "min": 2,
    "max": 2,
}
OPERATORS = ("+", "-", "*", "/", "^")


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    args: Tuple["Node", ...]


Node = Union[Number, Variable, BinaryOp, Call]


def to_source(node: Node) -> str:
    """
    Kanonik metin. İkili işlemler tam parantezlenir;
    çıktı tekrar ayrıştırıldığında aynı ağaç elde edilir.
    """
    if isinstance(node, Number):
        return repr(float(node.value))
    if isinstance(node, Variable):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({', '.join(to_source(a) for a in node.args)})"
    if isinstance(node, BinaryOp):
        return f"({to_source(node.left)} {node.op} {to_source(node.right)})"
    raise TypeError(f"Bilinmeyen düğüm: {node!r}")


def free_variables(node: Node) -> FrozenSet[str]:
    if isinstance(node, Variable):
        return frozenset({node.name})
    if isinstance(node, BinaryOp):
        return free_variables(node.left) | free_variables(node.right)
    if isinstance(node, Call):
        names = frozenset()
        for arg in node.args:
            names |= free_variables(arg)
        return names
    return frozenset()
