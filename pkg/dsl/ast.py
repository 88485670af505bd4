"""
Syntax tree of operator and space expressions.

Products are noncommutative and read as composition: in ``A*B`` the factor
B is applied first.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

__all__ = ['Node', 'Num', 'Var', 'Param', 'Sum', 'Product', 'Power', 'Comm', 'Call', 'VARIABLES', 'PARAMETERS']

VARIABLES = ('x', 'd', 'D', 'f', 'a')
PARAMETERS = ('lambda', 'k2')


class Node:
    pass


@dataclass(frozen=True)
class Num(Node):
    """Nonnegative rational literal."""
    value: Fraction


@dataclass(frozen=True)
class Var(Node):
    name: str


@dataclass(frozen=True)
class Param(Node):
    name: str


@dataclass(frozen=True)
class Sum(Node):
    """Signed terms, e.g. (('-', x), ('+', d)) for -x + d."""
    terms: Tuple[Tuple[str, Node], ...]


@dataclass(frozen=True)
class Product(Node):
    """Factors with their operators; the first operator is always '*'."""
    factors: Tuple[Tuple[str, Node], ...]


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: Union[int, Node]


@dataclass(frozen=True)
class Comm(Node):
    lhs: Node
    rhs: Node


@dataclass(frozen=True)
class Call(Node):
    name: str
    args: Tuple[Node, ...] = ()
    kwargs: Tuple[Tuple[str, Node], ...] = ()
