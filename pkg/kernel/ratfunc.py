"""
Rational functions in x over the parameter field Q(a, lambda, k2).

Numerator and denominator are dense coefficient tuples (highest degree first,
the convention of ``sympy.polys.densebasic``) over ``PDOM``; the arithmetic is
delegated to sympy's dense univariate routines.
"""
from functools import total_ordering

from sympy import Symbol
from sympy.polys.densearith import (dup_add, dup_mul, dup_mul_ground, dup_neg, dup_quo_ground,
                                    dup_sub, dup_div, dup_pow)
from sympy.polys.densebasic import dup_strip
from sympy.polys.densetools import dup_diff, dup_monic
from sympy.polys.euclidtools import dup_inner_gcd

from base.base_errors import NonLaurentCoefficient
from .scalars import PDOM, param, specialize_scalar

__all__ = ['NEG_INF', 'degree', 'RatFunc', 'X_SYMBOL']

X_SYMBOL = Symbol('x')


@total_ordering
class _NegativeInfinity:
    """Degree of the zero polynomial; absorbs addition, below every integer."""
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    def __hash__(self):
        return hash('-oo')

    def __repr__(self):
        return '-oo'


NEG_INF = _NegativeInfinity()


def degree(dense):
    return len(dense) - 1 if dense else NEG_INF


def _is_monomial(dense):
    return all(not c for c in dense[1:])


def _trailing_zeros(dense):
    count = 0
    for c in reversed(dense):
        if c:
            break
        count += 1
    return count


def _normalize(num, den):
    num = dup_strip([param(c) for c in num])
    den = dup_strip([param(c) for c in den])
    if not den:
        raise ZeroDivisionError('division by zero')
    if not num:
        return (), (PDOM.one,)
    if len(den) > 1:
        if _is_monomial(den):
            # den = c*x^k: the gcd is a power of x
            k = min(len(den) - 1, _trailing_zeros(num))
            if k:
                num, den = num[:-k], den[:-k]
        else:
            _, num, den = dup_inner_gcd(num, den, PDOM)
    lc = den[0]
    if lc != PDOM.one:
        num = dup_quo_ground(num, lc, PDOM)
        den = dup_monic(den, PDOM)
    return tuple(num), tuple(den)


class RatFunc:
    """
    Reduced fraction num/den with den monic in x. Immutable.
    """
    __slots__ = ('num', 'den')

    def __init__(self, num, den=(1,)):
        num, den = _normalize(num, den)
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    def __setattr__(self, key, value):
        raise AttributeError('RatFunc is immutable')

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        object.__setattr__(obj, 'num', tuple(num))
        object.__setattr__(obj, 'den', tuple(den))
        return obj

    # constructors

    @classmethod
    def constant(cls, value):
        return cls((param(value),))

    @classmethod
    def from_coeffs(cls, coeffs):
        """Polynomial from coefficients in ascending powers of x."""
        return cls(list(reversed([param(c) for c in coeffs])))

    @classmethod
    def x_power(cls, k, coeff=1):
        if k >= 0:
            return cls([param(coeff)] + [0] * k)
        return cls([param(coeff)], [1] + [0] * (-k))

    @classmethod
    def zero(cls):
        return cls._raw((), (PDOM.one,))

    @classmethod
    def one(cls):
        return cls._raw((PDOM.one,), (PDOM.one,))

    # queries

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return len(self.den) == 1

    def is_constant(self):
        return len(self.den) == 1 and len(self.num) <= 1

    def constant_value(self):
        assert self.is_constant(), '{} is not constant in x'.format(self)
        return self.num[0] if self.num else PDOM.zero

    def num_degree(self):
        return degree(self.num)

    def den_degree(self):
        return degree(self.den)

    def coeffs(self):
        """Ascending coefficients of a polynomial."""
        assert self.is_polynomial(), '{} is not a polynomial'.format(self)
        return list(reversed(self.num))

    def laurent(self):
        """
        Split into (k, ascending numerator coefficients) with self = num(x)/x^k.
        """
        if not _is_monomial(self.den):
            raise NonLaurentCoefficient(str(self))
        return len(self.den) - 1, list(reversed(self.num))

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        return RatFunc.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        if self.den == other.den:
            return RatFunc(dup_add(list(self.num), list(other.num), PDOM), self.den)
        num = dup_add(dup_mul(list(self.num), list(other.den), PDOM),
                      dup_mul(list(other.num), list(self.den), PDOM), PDOM)
        return RatFunc(num, dup_mul(list(self.den), list(other.den), PDOM))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(dup_neg(list(self.num), PDOM), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self or not other:
            return RatFunc.zero()
        return RatFunc(dup_mul(list(self.num), list(other.num), PDOM),
                       dup_mul(list(self.den), list(other.den), PDOM))

    __rmul__ = __mul__

    def scale(self, scalar):
        scalar = param(scalar)
        if not scalar:
            return RatFunc.zero()
        return RatFunc._raw(dup_mul_ground(list(self.num), scalar, PDOM), self.den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError('division by zero')
        return RatFunc(dup_mul(list(self.num), list(other.den), PDOM),
                       dup_mul(list(self.den), list(other.num), PDOM))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return RatFunc.one() / (self ** -k)
        return RatFunc(dup_pow(list(self.num), k, PDOM), dup_pow(list(self.den), k, PDOM))

    def diff(self):
        """d/dx"""
        num, den = list(self.num), list(self.den)
        if len(den) == 1:
            return RatFunc(dup_diff(num, 1, PDOM))
        top = dup_sub(dup_mul(dup_diff(num, 1, PDOM), den, PDOM),
                      dup_mul(num, dup_diff(den, 1, PDOM), PDOM), PDOM)
        return RatFunc(top, dup_mul(den, den, PDOM))

    def divmod_poly(self, modulus):
        """
        Quotient and remainder of the numerator by a polynomial modulus.
        Only meaningful for polynomials.
        """
        assert self.is_polynomial(), '{} is not a polynomial'.format(self)
        q, r = dup_div(list(self.num), list(modulus.num), PDOM)
        return RatFunc(q), RatFunc(r)

    def specialize(self, name, point):
        num = [specialize_scalar(c, name, point) for c in self.num]
        den = [specialize_scalar(c, name, point) for c in self.den]
        return RatFunc(num, den)

    # comparison and printing

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc.constant(other)
            except (TypeError, ValueError, KeyError):
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def as_expr(self):
        def dense_expr(dense):
            top = len(dense) - 1
            return sum((c.as_expr() * X_SYMBOL ** (top - i) for i, c in enumerate(dense) if c), 0)
        return dense_expr(self.num) / dense_expr(self.den)

    def __str__(self):
        return str(self.as_expr()).replace('**', '^')

    def __repr__(self):
        return 'RatFunc({})'.format(self)
