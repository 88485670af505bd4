"""
Exact scalars of the engine.

BigRational is ``fractions.Fraction``. ParamScalar is an element of the
rational function field Q(a, lambda, k2) provided by sympy's sparse
``FracField``; sympy keeps every element reduced (numerator and denominator
coprime) on construction, which is the canonical form the rest of the engine
relies on for structural equality.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from sympy import QQ
from sympy.polys.fields import FracElement, field

from base.base_errors import SingularSpecialization

__all__ = ['PARAMS', 'PDOM', 'A', 'LAMBDA', 'K2', 'PARAM_NAMES', 'is_param', 'param', 'to_qq', 'to_fraction',
           'is_constant', 'depends_on', 'linear_in_a', 'specialize_scalar', 'format_scalar', 'QuasiExponent']

PARAM_NAMES = ('a', 'lambda', 'k2')

PARAMS, A, LAMBDA, K2 = field(','.join(PARAM_NAMES), QQ)

# sympy domain wrapper so dense polynomial routines can run over Q(a, lambda, k2)
PDOM = PARAMS.to_domain()


def is_param(value):
    """True for elements of Q(a, lambda, k2)."""
    return isinstance(value, FracElement) and value.field == PARAMS


def to_qq(value):
    if not isinstance(value, (int, Fraction, str)):
        # ground elements of sympy QQ
        value = _qq_fraction(value)
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _qq_fraction(q):
    return Fraction(int(q.numerator), int(q.denominator))


def param(value):
    """
    Coerce int, Fraction or field element into a ParamScalar.
    """
    if is_param(value):
        return value
    if isinstance(value, str):
        return {'a': A, 'lambda': LAMBDA, 'k2': K2}[value]
    return PARAMS(to_qq(value))


def is_constant(value):
    value = param(value)
    return value.numer.is_ground and value.denom.is_ground


def to_fraction(value):
    """
    Rational value of a constant ParamScalar.
    """
    value = param(value)
    assert is_constant(value), 'scalar {} depends on a parameter'.format(format_scalar(value))
    return _qq_fraction(value.numer.LC / value.denom.LC)


def linear_in_a(value):
    """
    Split value = c1*a + c0 with rational c1, c0; None when value is not of that form.
    """
    value = param(value)
    if not value.denom.is_ground:
        return None
    parts = {}
    for monom, coeff in value.numer.terms():
        if monom[1:] != (0, 0) or monom[0] > 1:
            return None
        parts[monom[0]] = coeff / value.denom.LC
    return _qq_fraction(parts.get(1, QQ.zero)), _qq_fraction(parts.get(0, QQ.zero))


def depends_on(value, name):
    idx = PARAM_NAMES.index(name)
    value = param(value)
    return any(monom[idx] for monom in value.numer.monoms()) or \
        any(monom[idx] for monom in value.denom.monoms())


def specialize_scalar(value, name, point):
    """
    Substitute ``name = point`` (a rational) into a ParamScalar.

    The element is already reduced, so removable poles such as
    (a^2-4)/(a-2) at a=2 never trigger the singular case.
    """
    value = param(value)
    idx = PARAM_NAMES.index(name)
    point_qq = to_qq(point)
    denom = value.denom.subs(idx, point_qq)
    if not denom:
        raise SingularSpecialization(name, Fraction(point), format_scalar(PARAMS(value.denom)))
    numer = value.numer.subs(idx, point_qq)
    return PARAMS.new(numer, denom)


def format_scalar(value):
    return str(param(value).as_expr()).replace('**', '^')


@total_ordering
@dataclass(frozen=True)
class QuasiExponent:
    """
    Exponent ``offset + a_part*a`` of a quasi-monomial x^(offset + a_part*a).
    Ordered lexicographically by (a_part, offset).
    """
    offset: Fraction = Fraction(0)
    a_part: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 'offset', Fraction(self.offset))
        object.__setattr__(self, 'a_part', Fraction(self.a_part))

    @classmethod
    def from_scalar(cls, value):
        split = linear_in_a(value)
        if split is None:
            return None
        return cls(split[1], split[0])

    @property
    def sort_key(self):
        return self.a_part, self.offset

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __add__(self, other):
        if not isinstance(other, QuasiExponent):
            other = QuasiExponent(other)
        return QuasiExponent(self.offset + other.offset, self.a_part + other.a_part)

    def value(self):
        return param(self.offset) + param(self.a_part) * A

    def specialize(self, a0):
        return QuasiExponent(self.offset + self.a_part * Fraction(a0))

    def __str__(self):
        if not self.a_part:
            return str(self.offset)
        coeff = {1: '', -1: '-'}.get(self.a_part, '{}*'.format(self.a_part))
        head = '{}a'.format(coeff)
        if not self.offset:
            return head
        sign = '+' if self.offset > 0 else '-'
        return '{}{}{}'.format(head, sign, abs(self.offset))
