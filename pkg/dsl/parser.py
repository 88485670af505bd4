from collections import namedtuple
from fractions import Fraction

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from base.base_errors import DslSyntaxError
from .ast import Call, Comm, Num, Param, Power, Product, Sum, Var, PARAMETERS, VARIABLES

__all__ = ['GRAMMAR', 'parse', 'split_top_level']

GRAMMAR = r"""
start: expr

expr: MINUS? term ((PLUS | MINUS) term)*
term: factor ((STAR | SLASH) factor)*
factor: atom ("^" exponent)?

exponent: MINUS? INT            -> int_exponent
        | "(" expr ")"          -> expr_exponent

atom: NAME                      -> name
    | INT                       -> integer
    | RATIONAL                  -> rational
    | NAME "(" [args] ")"       -> call
    | "(" expr ")"              -> group

args: arg ("," arg)*
?arg: expr
    | NAME "=" expr             -> kwarg

PLUS: "+"
MINUS: "-"
STAR: "*"
SLASH: "/"
RATIONAL.2: /\d+\/\d+/
INT: /\d+/
NAME: /[A-Za-z_][A-Za-z0-9_]*/

%ignore /[ \t\r\n]+/
"""

_Keyword = namedtuple('_Keyword', 'name node')


class AstBuilder(Transformer):

    def start(self, children):
        return children[0]

    def expr(self, children):
        items = list(children)
        sign = '+'
        if isinstance(items[0], Token) and items[0].type == 'MINUS':
            sign = '-'
            items = items[1:]
        terms = [(sign, items[0])]
        terms += [(str(op), node) for op, node in zip(items[1::2], items[2::2])]
        if len(terms) == 1 and sign == '+':
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self, children):
        if len(children) == 1:
            return children[0]
        factors = [('*', children[0])]
        factors += [(str(op), node) for op, node in zip(children[1::2], children[2::2])]
        return Product(tuple(factors))

    def factor(self, children):
        if len(children) == 1:
            return children[0]
        return Power(children[0], children[1])

    def int_exponent(self, children):
        value = int(children[-1])
        return -value if len(children) == 2 else value

    def expr_exponent(self, children):
        return children[0]

    def name(self, children):
        token = children[0]
        if token in VARIABLES:
            return Var(str(token))
        if token in PARAMETERS:
            return Param(str(token))
        raise DslSyntaxError('unknown name {!r}'.format(str(token)), token.line, token.column)

    def integer(self, children):
        return Num(Fraction(int(children[0])))

    def rational(self, children):
        return Num(Fraction(str(children[0])))

    def group(self, children):
        return children[0]

    def kwarg(self, children):
        return _Keyword(str(children[0]), children[1])

    def args(self, children):
        return list(children)

    def call(self, children):
        token, args = children[0], children[1] or []
        positional = tuple(a for a in args if not isinstance(a, _Keyword))
        keywords = tuple((a.name, a.node) for a in args if isinstance(a, _Keyword))
        if token == 'comm':
            if len(positional) != 2 or keywords:
                raise DslSyntaxError('comm takes exactly two operators', token.line, token.column)
            return Comm(*positional)
        return Call(str(token), positional, keywords)


_parser = Lark(GRAMMAR, start='start', parser='lalr')


def parse(src):
    """
    Parse an operator or space expression into its syntax tree.

    :raises DslSyntaxError: with the line and column of the offending input
    """
    try:
        tree = _parser.parse(src)
    except UnexpectedInput as err:
        raise DslSyntaxError(err.__class__.__name__, err.line, err.column) from None
    try:
        return AstBuilder().transform(tree)
    except VisitError as err:
        if isinstance(err.orig_exc, (DslSyntaxError, ZeroDivisionError)):
            raise err.orig_exc from None
        raise


def split_top_level(src, sep=','):
    """Split at separators outside parentheses."""
    parts, depth, current = [], 0, []
    for char in src:
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        if char == sep and depth == 0:
            parts.append(''.join(current).strip())
            current = []
        else:
            current.append(char)
    parts.append(''.join(current).strip())
    return [p for p in parts if p]
