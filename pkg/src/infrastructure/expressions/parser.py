"""
Katsayı İfadesi Ayrıştırıcı
lark LALR grameri: standart öncelik, sağdan birleşen '^'.
"""

import logging
import math
from functools import lru_cache

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from ...domain.exceptions import ExpressionSyntaxError, UnknownIdentifierError
from .nodes import FUNCTION_ARITY, VARIABLES, BinaryOp, Call, Node, Number, Variable

logger = logging.getLogger(__name__)


# expr := term (('+'|'-') term)*
# term := factor (('*'|'/') factor)*
# factor := base ('^' factor)?
# base := number | ident | func '(' expr ')' | '(' expr ')'
COEFF_GRAMMAR = r"""
    ?start: expr

    ?expr: term
         | expr "+" term   -> add
         | expr "-" term   -> sub

    ?term: factor
         | term "*" factor -> mul
         | term "/" factor -> div

    ?factor: base
           | base "^" factor -> pow

    ?base: NUMBER                          -> number
         | NAME "(" expr ("," expr)* ")"   -> call
         | NAME                            -> variable
         | "(" expr ")"

    NUMBER: /[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?/
    NAME: /[A-Za-z_][A-Za-z_0-9]*/

    %import common.WS
    %ignore WS
"""


@v_args(inline=True)
class ASTBuilder(Transformer):
    """lark ağacını değişmez AST düğümlerine dönüştürür"""

    def number(self, token: Token) -> Number:
        value = float(token)
        if not math.isfinite(value):
            raise ExpressionSyntaxError(f"Sonlu olmayan sabit: {token}", token.start_pos)
        return Number(value)

    def variable(self, token: Token) -> Variable:
        if str(token) not in VARIABLES:
            raise UnknownIdentifierError(
                f"Bilinmeyen değişken: '{token}' (izin verilenler: {', '.join(VARIABLES)})",
                token.start_pos,
            )
        return Variable(str(token))

    def call(self, name: Token, *args: Node) -> Call:
        func = str(name)
        if func not in FUNCTION_ARITY:
            raise UnknownIdentifierError(
                f"Bilinmeyen fonksiyon: '{func}' (izin verilenler: {', '.join(FUNCTION_ARITY)})",
                name.start_pos,
            )
        if len(args) != FUNCTION_ARITY[func]:
            raise ExpressionSyntaxError(
                f"'{func}' {FUNCTION_ARITY[func]} argüman alır, verilen: {len(args)}",
                name.start_pos,
            )
        return Call(func, tuple(args))

    def add(self, left, right):
        return BinaryOp("+", left, right)

    def sub(self, left, right):
        return BinaryOp("-", left, right)

    def mul(self, left, right):
        return BinaryOp("*", left, right)

    def div(self, left, right):
        return BinaryOp("/", left, right)

    def pow(self, left, right):
        return BinaryOp("^", left, right)


@lru_cache(maxsize=1)
def _get_parser() -> Lark:
    return Lark(COEFF_GRAMMAR, start="start", parser="lalr", propagate_positions=True)


def _error_position(error: UnexpectedInput, source: str) -> int:
    position = getattr(error, "pos_in_stream", None)
    if position is None or position < 0:
        return len(source)
    return position


def parse_tree(source: str) -> Node:
    """
    Metni AST'ye ayrıştır.

    Raises:
        ExpressionSyntaxError: Sözdizimi hatası (konum ile)
        UnknownIdentifierError: İzin verilmeyen değişken/fonksiyon
    """
    if not isinstance(source, str) or not source.strip():
        raise ExpressionSyntaxError("Boş ifade", 0, str(source))

    try:
        tree = _get_parser().parse(source)
    except UnexpectedInput as e:
        position = _error_position(e, source)
        raise ExpressionSyntaxError("Sözdizimi hatası", position, source) from e

    try:
        return ASTBuilder().transform(tree)
    except VisitError as e:
        original = e.orig_exc
        if isinstance(original, ExpressionSyntaxError):
            original.source = source
            raise original from None
        raise
