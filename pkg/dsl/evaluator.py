"""
Evaluation of syntax trees into scalars, operators and spaces.
"""
import logging

from base.base_errors import DslSyntaxError, PreconditionError
from calculus import DiffOp, commutator
from extension import Lame, MatOp, QuadSpace, RatioSqrt, SqrtP2, lift, printed_generators
from kernel import RatFunc, is_param, param, to_fraction
from spaces import (P, V1Space, Va, Va1, a_power, make_bosonic, make_jumps, make_k, make_kernels, make_mixing,
                    make_sl2)
from .ast import Call, Comm, Num, Param, Power, Product, Sum, Var
from .parser import parse

__all__ = ['evaluate', 'evaluate_source', 'CALLS']

logger = logging.getLogger(__name__)


def _int(value):
    value = to_fraction(value)
    if value.denominator != 1:
        raise PreconditionError('expected an integer, got {}'.format(value))
    return int(value)


def _printed_member(index):
    def build(space):
        if not isinstance(space, QuadSpace):
            raise PreconditionError('the printed S operators need a quad space context')
        return printed_generators(space)[index][1]
    return build


# name -> (builder, converters of the positional arguments)
CALLS = {
    'jp': (lambda n: make_sl2(n).plus, (_int,)),
    'j0': (lambda n: make_sl2(n).zero, (_int,)),
    'jm': (lambda: make_sl2(0).minus, ()),
    'kp': (lambda n, a: make_k(n, a).plus, (_int, param)),
    'k0': (lambda n, a: make_k(n, a).zero, (_int, param)),
    'km': (lambda n, a: make_k(n, a).minus, (_int, param)),
    'Jp': (lambda n, m, a: make_bosonic(n, m, a).plus, (_int, _int, param)),
    'J0': (lambda n, m, a: make_bosonic(n, m, a).zero, (_int, _int, param)),
    'Jm': (lambda n, m, a: make_bosonic(n, m, a).minus, (_int, _int, param)),
    'K': (lambda n, m, a: make_kernels(n, m, a).K, (_int, _int, param)),
    'Kp': (lambda n, m, a: make_kernels(n, m, a).Kp, (_int, _int, param)),
    'Q': (lambda n, m, a, alpha: make_mixing(n, m, a, alpha).Q, (_int, _int, param, _int)),
    'Qb': (lambda n, m, a, alpha: make_mixing(n, m, a, alpha).Qbar, (_int, _int, param, _int)),
    'Wp': (lambda n, m, k: make_jumps(n, m, k).plus, (_int, _int, _int)),
    'Wm': (lambda n, m, k: make_jumps(n, m, k).minus, (_int, _int, _int)),
    'V1': (V1Space, (_int, _int, param)),
    'P': (P, (_int,)),
    'Va1': (Va1, (_int, _int)),
    'Va': (Va, (_int, _int)),
    'SqrtP2': (SqrtP2, (_int, param)),
    'RatioSqrt': (RatioSqrt, (_int, param)),
    'Lame': (Lame, (_int, param)),
}

CONTEXT_CALLS = {
    'S1': _printed_member(0),
    'S2': _printed_member(1),
    'S3': _printed_member(2),
}


def _is_scalar(value):
    return is_param(value)


def _promote(lhs, rhs):
    """Bring two values to a common kind: scalar < DiffOp < MatOp."""
    if isinstance(lhs, MatOp) or isinstance(rhs, MatOp):
        r = lhs.r if isinstance(lhs, MatOp) else rhs.r
        return lift(lhs, r), lift(rhs, r)
    if isinstance(lhs, DiffOp) or isinstance(rhs, DiffOp):
        return [v if isinstance(v, DiffOp) else DiffOp.scalar(v) for v in (lhs, rhs)]
    return lhs, rhs


def _multiplier(value):
    """The rational function of a multiplication operator."""
    if _is_scalar(value):
        return RatFunc.constant(value)
    if isinstance(value, DiffOp) and value.is_shift_free() and value.order() <= 0:
        return value.coefficient(0)
    raise PreconditionError('{} is not a multiplication operator'.format(value))


def _divide(lhs, rhs):
    if _is_scalar(rhs):
        if not rhs:
            raise ZeroDivisionError('division by zero')
        return lhs / rhs if _is_scalar(lhs) else lhs.scale(1 / rhs)
    divisor = _multiplier(rhs)
    if not divisor:
        raise ZeroDivisionError('division by zero')
    inverse = DiffOp.mult(RatFunc.one() / divisor)
    if _is_scalar(lhs):
        return inverse.scale(lhs)
    lhs, inverse = _promote(lhs, inverse)
    return lhs * inverse


def _power(base, exponent, space):
    if not isinstance(exponent, int):
        value = evaluate(exponent, space)
        if not (_is_scalar(value) and base == DiffOp.x()):
            raise PreconditionError('only x may be raised to a parameter exponent')
        return a_power(value)
    if _is_scalar(base):
        if exponent < 0 and not base:
            raise ZeroDivisionError('division by zero')
        return base ** exponent if exponent else param(1)
    if exponent < 0:
        return DiffOp.mult(_multiplier(base) ** exponent)
    return base ** exponent


def _call(node, space):
    if node.name in CONTEXT_CALLS:
        if node.args or node.kwargs:
            raise PreconditionError('{}() takes no arguments'.format(node.name))
        return CONTEXT_CALLS[node.name](space)
    if node.name == 'Quad':
        return _quad(node, space)
    if node.name not in CALLS:
        raise DslSyntaxError('unknown generator or space {!r}'.format(node.name))
    builder, converters = CALLS[node.name]
    if node.kwargs or len(node.args) != len(converters):
        raise PreconditionError('{} takes {} positional arguments'.format(node.name, len(converters)))
    values = [convert(evaluate(arg, space)) for convert, arg in zip(converters, node.args)]
    return builder(*values)


def _quad(node, space):
    keywords = dict(node.kwargs)
    args = list(node.args)
    r_node = keywords.pop('r', None) or (args.pop(0) if len(args) == 3 else None)
    if r_node is None or keywords or len(args) != 2:
        raise PreconditionError('Quad takes r=<function of x>, n, m')
    r = _multiplier(evaluate(r_node, space))
    n, m = (_int(evaluate(arg, space)) for arg in args)
    return QuadSpace(r, n, m)


def evaluate(node, space=None):
    """
    Value of a syntax tree: a ParamScalar, a DiffOp, a MatOp (when f occurs;
    needs a quad ``space``), or a space.
    """
    if isinstance(node, Num):
        return param(node.value)
    if isinstance(node, Param):
        return param(node.name)
    if isinstance(node, Var):
        if node.name == 'a':
            return param('a')
        if node.name == 'x':
            return DiffOp.x()
        if node.name == 'd':
            return DiffOp.d()
        if node.name == 'D':
            return DiffOp.euler()
        if not isinstance(space, QuadSpace):
            raise PreconditionError('f needs a quad space context')
        return MatOp.f(space.r)
    if isinstance(node, Sum):
        total = None
        for sign, term in node.terms:
            value = evaluate(term, space)
            value = -value if sign == '-' else value
            if total is None:
                total = value
            else:
                lhs, rhs = _promote(total, value)
                total = lhs + rhs
        return total
    if isinstance(node, Product):
        result = evaluate(node.factors[0][1], space)
        for op, factor in node.factors[1:]:
            value = evaluate(factor, space)
            if op == '/':
                result = _divide(result, value)
            else:
                lhs, rhs = _promote(result, value)
                result = lhs * rhs
        return result
    if isinstance(node, Power):
        return _power(evaluate(node.base, space), node.exponent, space)
    if isinstance(node, Comm):
        lhs, rhs = _promote(evaluate(node.lhs, space), evaluate(node.rhs, space))
        if isinstance(lhs, MatOp):
            return lhs.commutator(rhs)
        if _is_scalar(lhs):
            return param(0)
        return commutator(lhs, rhs)
    if isinstance(node, Call):
        return _call(node, space)
    raise TypeError('not a syntax tree node: {!r}'.format(node))


def evaluate_source(src, space=None):
    return evaluate(parse(src), space)

