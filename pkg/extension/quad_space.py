"""
Spaces P_n + f P_m with f^2 = r(x), and their elements p + f q.
"""
import logging
from dataclasses import dataclass
from math import isqrt

from sympy.polys.sqfreetools import dup_sqf_list

from base import BaseSpace
from base.base_errors import DegenerateExtension, PreconditionError
from kernel import K2, LAMBDA, PDOM, RatFunc, format_scalar, is_constant, param, specialize_scalar, to_fraction

__all__ = ['QuadElement', 'QuadLabel', 'QuadSpace', 'SqrtP2', 'RatioSqrt', 'Lame', 'is_perfect_square']

logger = logging.getLogger(__name__)


def _as_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (list, tuple)):
        return RatFunc.from_coeffs(value)
    return RatFunc.constant(value)


@dataclass(frozen=True)
class QuadElement:
    """p + f q"""
    p: RatFunc
    q: RatFunc

    @classmethod
    def of(cls, p=0, q=0):
        return cls(_as_ratfunc(p), _as_ratfunc(q))

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __add__(self, other):
        return QuadElement(self.p + other.p, self.q + other.q)

    def __sub__(self, other):
        return QuadElement(self.p - other.p, self.q - other.q)

    def scale(self, scalar):
        return QuadElement(self.p.scale(scalar), self.q.scale(scalar))

    def __str__(self):
        return '({}) + f*({})'.format(self.p, self.q)


@dataclass(frozen=True)
class QuadLabel:
    part: str
    power: int

    def __str__(self):
        monomial = 'x^{}'.format(self.power)
        return monomial if self.part == 'p' else 'f*' + monomial


def _is_square_scalar(value):
    value = param(value)
    if is_constant(value):
        q = to_fraction(value)
        return q >= 0 and isqrt(q.numerator) ** 2 == q.numerator and isqrt(q.denominator) ** 2 == q.denominator
    for poly in (value.numer, value.denom):
        coeff, factors = poly.sqf_list()
        if any(k % 2 for _, k in factors) or not _is_square_scalar(coeff):
            return False
    return True


def _is_square_poly(dense):
    if not dense:
        return True
    coeff, factors = dup_sqf_list(list(dense), PDOM)
    return all(k % 2 == 0 for _, k in factors) and _is_square_scalar(coeff)


def is_perfect_square(r):
    """Whether r is the square of a rational function of x."""
    return _is_square_poly(r.num) and _is_square_poly(r.den)


class QuadSpace(BaseSpace):
    """
    span{1, ..., x^n} + f span{1, ..., x^m} with f^2 = r.
    """

    def __init__(self, r, n, m, name=None, params=None):
        r = _as_ratfunc(r)
        if not r:
            raise DegenerateExtension('f^2 = 0 does not define an extension')
        if is_perfect_square(r):
            raise DegenerateExtension('r = {} is a perfect square: f is rational'.format(r))
        if n < 0 or m < 0:
            raise PreconditionError('Quad needs nonnegative n and m, got n={}, m={}'.format(n, m))
        self.r = r
        self.n = n
        self.m = m
        self.name = name
        self.params = dict(params or {})

    def basis(self):
        return [QuadLabel('p', i) for i in range(self.n + 1)] + [QuadLabel('q', j) for j in range(self.m + 1)]

    def element(self, index):
        label = self.basis()[index]
        monomial = RatFunc.x_power(label.power)
        if label.part == 'p':
            return QuadElement(monomial, RatFunc.zero())
        return QuadElement(RatFunc.zero(), monomial)

    def apply(self, op, index):
        return op.act(self.element(index))

    def _component(self, value, part, bound):
        coords = [PDOM.zero] * (bound + 1)
        if not value.is_polynomial():
            return coords, [('{} component {}'.format(part, value), 'not polynomial')]
        outside = []
        for power, coeff in enumerate(value.coeffs()):
            if power <= bound:
                coords[power] = coeff
            elif coeff:
                outside.append((QuadLabel(part, power), format_scalar(coeff)))
        return coords, outside

    def coordinates(self, element):
        p_coords, p_outside = self._component(element.p, 'p', self.n)
        q_coords, q_outside = self._component(element.q, 'q', self.m)
        return p_coords + q_coords, p_outside + q_outside

    def specialize(self, name, point):
        params = {key: specialize_scalar(value, name, point) for key, value in self.params.items()}
        return QuadSpace(self.r.specialize(name, point), self.n, self.m, params=params)

    def __str__(self):
        return self.name or 'Quad(r={}, {}, {})'.format(self.r, self.n, self.m)

    __repr__ = __str__


def _constant_or_symbol(value, symbol):
    return symbol if value is None else param(value)


def SqrtP2(n, lam=None):
    """f = sqrt((1-x)(1-lambda x)), m = n-1."""
    if n < 1:
        raise PreconditionError('SqrtP2 needs n >= 1')
    lam = _constant_or_symbol(lam, LAMBDA)
    r = RatFunc.from_coeffs([1, -(1 + lam), lam])
    return QuadSpace(r, n, n - 1, name='SqrtP2({}, {})'.format(n, format_scalar(lam)), params={'lambda': lam})


def RatioSqrt(n, lam=None):
    """f = sqrt((1-x)/(1-lambda x)), m = n."""
    lam = _constant_or_symbol(lam, LAMBDA)
    r = RatFunc.from_coeffs([1, -1]) / RatFunc.from_coeffs([1, -lam])
    return QuadSpace(r, n, n, name='RatioSqrt({}, {})'.format(n, format_scalar(lam)),
                     params={'lambda': lam})


def Lame(n, k2=None):
    """f = cn*dn in x = sn^2: r = (1-x)(1-k2 x), m = n-1."""
    if n < 1:
        raise PreconditionError('Lame needs n >= 1')
    k2 = _constant_or_symbol(k2, K2)
    r = RatFunc.from_coeffs([1, -(1 + k2), k2])
    return QuadSpace(r, n, n - 1, name='Lame({}, {})'.format(n, format_scalar(k2)), params={'k2': k2})
