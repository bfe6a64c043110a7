"""
Expressions Infrastructure
"""

from .nodes import BinaryOp, Call, Number, Variable, to_source
from .parser import COEFF_GRAMMAR, parse_tree
from .expression import Expression, constant, parse_expr, shifted

__all__ = [
    "BinaryOp",
    "Call",
    "Number",
    "Variable",
    "to_source",
    "COEFF_GRAMMAR",
    "parse_tree",
    "Expression",
    "constant",
    "parse_expr",
    "shifted",
]
