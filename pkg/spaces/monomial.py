"""
Monomial spaces span{1, ..., x^n} + x^a span{1, ..., x^m} and their exponent sets.
"""
import logging
from dataclasses import dataclass

from base import BaseSpace
from base.base_errors import PreconditionError
from calculus import QuasiPoly, act_quasi
from kernel import (A, PDOM, QuasiExponent, depends_on, format_scalar, is_constant, param, specialize_scalar,
                    to_fraction)

__all__ = ['V1Space', 'ExponentFamily', 'P', 'Va1', 'Va', 'basis', 'check_invariance', 'exponent_set_equiv']

logger = logging.getLogger(__name__)


class V1Space(BaseSpace):
    """
    V1(n, m, a). With ``m=None`` the space is the plain polynomial space P_n.

    ``a`` is the formal parameter (any c1*a + c0 with c1 != 0) or a rational
    number. An integer a in {-m, ..., n} makes the two parts share exponents.
    """

    def __init__(self, n, m=None, a='a'):
        if n < 0 or (m is not None and m < 0):
            raise PreconditionError('V1 needs nonnegative n and m, got n={}, m={}'.format(n, m))
        self.n = n
        self.m = m
        self.a = param(a)
        self._start = QuasiExponent.from_scalar(self.a)
        self._basis = None
        self._index = None

    # regime

    @property
    def is_plain(self):
        return self.m is None

    @property
    def generic(self):
        return depends_on(self.a, 'a')

    @property
    def rational(self):
        return is_constant(self.a)

    @property
    def a_value(self):
        return to_fraction(self.a)

    def _integer_a(self):
        if self.is_plain or not self.rational or self.a_value.denominator != 1:
            return None
        return int(self.a_value)

    @property
    def collides(self):
        """a lies in {-m, ..., n}: the two parts share exponents."""
        a = self._integer_a()
        return a is not None and -self.m <= a <= self.n

    @property
    def merged(self):
        """The two parts overlap or abut, so the exponents form one run a0, a0+1, ..., a1."""
        a = self._integer_a()
        return a is not None and -self.m - 1 <= a <= self.n + 1

    @property
    def delta(self):
        return abs(self.m - self.n)

    @property
    def p(self):
        return max(self.m, self.n)

    # BaseSpace interface

    def parts(self):
        """
        Exponents of the polynomial part and of the x^a part.
        """
        if self._start is None:
            raise PreconditionError('exponent {} is not of the form c1*a + c0'.format(format_scalar(self.a)))
        lower = [QuasiExponent(i) for i in range(self.n + 1)]
        upper = [] if self.is_plain else [self._start + j for j in range(self.m + 1)]
        return lower, upper

    def basis(self):
        if self._basis is None:
            lower, upper = self.parts()
            self._basis = list(dict.fromkeys(lower + upper))
            self._index = {e: i for i, e in enumerate(self._basis)}
        return self._basis

    def apply(self, op, index):
        image = act_quasi(op, QuasiPoly.monomial(self.basis()[index]))
        if self.rational and not self.is_plain:
            image = image.specialize(self.a_value)
        return image

    def coordinates(self, element):
        self.basis()
        coords = [PDOM.zero] * len(self._basis)
        outside = []
        for exponent, coeff in element:
            position = self._index.get(exponent)
            if position is None:
                outside.append((exponent, format_scalar(coeff)))
            else:
                coords[position] = coeff
        return coords, outside

    def contains(self, exponent):
        self.basis()
        return exponent in self._index

    def family(self):
        blocks = [(0, 1, self.n + 1)]
        if not self.is_plain:
            blocks.append((self.a, 1, self.m + 1))
        return ExponentFamily.of(blocks)

    def specialize(self, a0):
        """The same space at a = a0 (only meaningful for the formal a)."""
        return V1Space(self.n, self.m, specialize_scalar(self.a, 'a', a0))

    def __eq__(self, other):
        return isinstance(other, V1Space) and (self.n, self.m, self.a) == (other.n, other.m, other.a)

    def __hash__(self):
        return hash((self.n, self.m, self.a))

    def __str__(self):
        if self.is_plain:
            return 'P({})'.format(self.n)
        return 'V1({}, {}, {})'.format(self.n, self.m, format_scalar(self.a))

    __repr__ = __str__


@dataclass(frozen=True)
class ExponentFamily:
    """
    Finite union of arithmetic progressions {start + i*step : 0 <= i < count}
    with ParamScalar start and step.
    """
    blocks: tuple

    @classmethod
    def of(cls, blocks):
        clean = []
        for start, step, count in blocks:
            if count < 0:
                raise PreconditionError('negative block length {}'.format(count))
            clean.append((param(start), param(step), count))
        return cls(tuple(clean))

    def exponents(self):
        return frozenset(start + i * step for start, step, count in self.blocks for i in range(count))

    def substitute(self, b):
        """Exponents after x -> x^b."""
        b = param(b)
        return ExponentFamily(tuple((start * b, step * b, count) for start, step, count in self.blocks))

    def __str__(self):
        return ' u '.join('{{{} + i*({}) : i < {}}}'.format(format_scalar(s), format_scalar(t), c)
                          for s, t, c in self.blocks)


def P(n):
    return V1Space(n)


def Va1(N, s):
    """{0, a-1, ..., s(a-1)} u {1, a, ..., 1 + (N-s-2)(a-1)}"""
    if not 0 <= s < N:
        raise PreconditionError('Va1 needs 0 <= s < N, got N={}, s={}'.format(N, s))
    return ExponentFamily.of([(0, A - 1, s + 1), (1, A - 1, N - s - 1)])


def Va(N, s):
    if not 0 <= s < N:
        raise PreconditionError('Va needs 0 <= s < N, got N={}, s={}'.format(N, s))
    return ExponentFamily.of([(0, A, s + 1), (1, A, N - s - 1)])


def basis(space):
    return space.basis()


def check_invariance(op, space):
    return space.check_invariance(op)


def _family(value):
    return value.family() if isinstance(value, V1Space) else value


def exponent_set_equiv(lhs, rhs, b=1):
    """
    Whether the exponents of ``lhs`` after x -> x^b are those of ``rhs``.
    """
    left = _family(lhs).substitute(b).exponents()
    right = _family(rhs).exponents()
    if left != right:
        logger.info('exponent sets differ: only left %s, only right %s',
                    sorted(map(format_scalar, left - right)), sorted(map(format_scalar, right - left)))
    return left == right
