import operator
from fractions import Fraction

from .scalars import *
from .ratfunc import *
from .linalg import *

_ARITH = {
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
    'div': operator.truediv,
}


def normalize(value):
    """
    Canonical form of a BigRational, ParamScalar or RatFunc (idempotent).
    """
    if isinstance(value, RatFunc):
        return RatFunc(value.num, value.den)
    if is_param(value):
        return PARAMS.new(value.numer, value.denom)
    return Fraction(value)


def arith(op, lhs, rhs):
    if op == 'div' and not rhs:
        raise ZeroDivisionError('division by zero')
    return normalize(_ARITH[op](lhs, rhs))


def specialize(value, point, name='a'):
    """
    Evaluate the parameter ``name`` at the rational ``point``.
    """
    if isinstance(value, RatFunc):
        return value.specialize(name, point)
    result = specialize_scalar(value, name, point)
    return to_fraction(result) if is_constant(result) else result
