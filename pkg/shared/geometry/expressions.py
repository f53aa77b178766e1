"""
Function expression language.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | "+" unary | power
    power  := atom ("^" unary)?
    atom   := NUMBER | NAME | NAME "(" expr ")" | "(" expr ")"

Identifiers are bound to chart coordinates; ``pi`` is the only constant and
sin, cos, exp, log the only functions. Parsing yields a sympy expression so
derivatives can be taken symbolically.
"""

import sympy
from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from shared.geometry.errors import ExpressionError

GRAMMAR = r"""
    ?start: sum

    ?sum: product
        | sum "+" product   -> add
        | sum "-" product   -> sub

    ?product: unary
        | product "*" unary -> mul
        | product "/" unary -> div

    ?unary: power
        | "-" unary         -> neg
        | "+" unary

    ?power: atom
        | atom "^" unary    -> pow

    ?atom: NUMBER           -> number
        | NAME "(" sum ")"  -> call
        | NAME              -> name
        | "(" sum ")"

    %import common.CNAME -> NAME
    %import common.NUMBER
    %import common.WS
    %ignore WS
"""

FUNCTIONS = {
    "sin": sympy.sin,
    "cos": sympy.cos,
    "exp": sympy.exp,
    "log": sympy.log,
}

CONSTANTS = {"pi": sympy.pi}

_parser = Lark(GRAMMAR, parser="lalr")


@v_args(inline=True)
class _ToSympy(Transformer):
    def __init__(self, symbols: dict[str, sympy.Symbol]):
        super().__init__()
        self._symbols = symbols

    def number(self, tok: Token):
        return sympy.Rational(str(tok))

    def name(self, tok: Token):
        key = str(tok)
        if key in self._symbols:
            return self._symbols[key]
        if key in CONSTANTS:
            return CONSTANTS[key]
        raise ExpressionError(f"unknown identifier {key!r}", tok.start_pos)

    def call(self, tok: Token, arg):
        fn = FUNCTIONS.get(str(tok))
        if fn is None:
            raise ExpressionError(f"unknown function {str(tok)!r}", tok.start_pos)
        return fn(arg)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def pow(self, a, b):
        return a ** b


def parse_expression(text: str, symbols: dict[str, sympy.Symbol]) -> sympy.Expr:
    """Parse ``text`` with identifiers bound to ``symbols``.

    Raises ExpressionError carrying the 0-based character position of the
    first offending input.
    """
    if not text or not text.strip():
        raise ExpressionError("empty expression", 0, text)
    try:
        tree = _parser.parse(text)
    except UnexpectedEOF as exc:
        raise ExpressionError("unexpected end of expression", len(text), text) from exc
    except UnexpectedCharacters as exc:
        raise ExpressionError(f"unexpected character {text[exc.pos_in_stream]!r}",
                              exc.pos_in_stream, text) from exc
    except UnexpectedInput as exc:
        pos = getattr(exc, "pos_in_stream", None)
        if pos is None or pos < 0:
            pos = len(text)
        raise ExpressionError("unexpected token", pos, text) from exc
    try:
        expr = _ToSympy(symbols).transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, ExpressionError):
            raise ExpressionError(exc.orig_exc.reason, exc.orig_exc.position, text) from None
        raise
    return sympy.sympify(expr)
