"""
Normal-ordered linear differential operators.

A DiffOp is a finite sum of terms x^(s*a) * c(x) * d^j, stored as a map
(s, j) -> c with c a RatFunc. Coefficient functions always stand to the left
of the derivative powers. The integer a-grading s carries the x^(-a) and x^a
factors of the subspace-mixing operators; s = 0 for every operator with
rational coefficients.
"""
from collections import defaultdict
from functools import lru_cache
from math import comb

from base.base_errors import PreconditionError
from kernel import RatFunc, PDOM, A, QuasiExponent, param, format_scalar, to_fraction
from .quasipoly import QuasiPoly

__all__ = ['DiffOp', 'compose', 'commutator', 'conjugate_by_power', 'act_quasi', 'act_poly', 'falling_factorial']


def _clean(terms):
    return {key: c for key, c in terms.items() if c}


class DiffOp:
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        object.__setattr__(self, 'terms', _clean(dict(terms or {})))

    def __setattr__(self, key, value):
        raise AttributeError('DiffOp is immutable')

    # constructors

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def identity(cls):
        return cls({(0, 0): RatFunc.one()})

    @classmethod
    def scalar(cls, value):
        return cls({(0, 0): RatFunc.constant(value)})

    @classmethod
    def mult(cls, coeff):
        """Multiplication by a rational function of x."""
        if not isinstance(coeff, RatFunc):
            coeff = RatFunc.constant(coeff)
        return cls({(0, 0): coeff})

    @classmethod
    def x(cls):
        return cls.mult(RatFunc.x_power(1))

    @classmethod
    def d(cls, order=1):
        return cls({(0, order): RatFunc.one()})

    @classmethod
    def euler(cls):
        """D = x*d"""
        return cls({(0, 1): RatFunc.x_power(1)})

    @classmethod
    def x_power(cls, k=0, shift=0):
        """Multiplication by x^(k + shift*a)."""
        return cls({(shift, 0): RatFunc.x_power(k)})

    # queries

    def __bool__(self):
        return bool(self.terms)

    def order(self):
        return max((j for _, j in self.terms), default=-1)

    def shifts(self):
        return sorted({s for s, _ in self.terms})

    def coefficient(self, order, shift=0):
        return self.terms.get((shift, order), RatFunc.zero())

    def is_shift_free(self):
        return all(s == 0 for s, _ in self.terms)

    # linear structure

    def _coerce(self, other):
        if isinstance(other, DiffOp):
            return other
        return DiffOp.mult(other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc[key] + c if key in acc else c
        return DiffOp(acc)

    __radd__ = __add__

    def __neg__(self):
        return DiffOp({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, scalar):
        scalar = param(scalar)
        return DiffOp({key: c.scale(scalar) for key, c in self.terms.items()})

    def __mul__(self, other):
        return compose(self, self._coerce(other))

    def __rmul__(self, other):
        return compose(self._coerce(other), self)

    def __pow__(self, k):
        assert k >= 0, 'negative operator powers are not defined'
        result = DiffOp.identity()
        for _ in range(k):
            result = compose(result, self)
        return result

    # evaluation of parameters

    def specialize(self, name, point):
        """
        Evaluate a parameter. Specializing a folds x^(s*a) into x^(s*point),
        which requires s*point to be an integer.
        """
        acc = defaultdict(RatFunc.zero)
        for (s, j), c in self.terms.items():
            c = c.specialize(name, point)
            if s and name == 'a':
                power = s * param(point)
                k = to_fraction(power)
                if k.denominator != 1:
                    raise PreconditionError('x^({}) is not a rational function'.format(format_scalar(power)))
                c = c * RatFunc.x_power(int(k))
                s = 0
            acc[(s, j)] = acc[(s, j)] + c
        return DiffOp(acc)

    # comparison and printing

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for (s, j) in sorted(self.terms, key=lambda key: (key[0], -key[1])):
            c = self.terms[(s, j)]
            factors = []
            if s:
                factors.append({1: 'x^(a)', -1: 'x^(-a)'}.get(s, 'x^({}*a)'.format(s)))
            if c != RatFunc.one() or (not s and not j):
                factors.append('({})'.format(c))
            if j:
                factors.append('d' if j == 1 else 'd^{}'.format(j))
            parts.append('*'.join(factors))
        return ' + '.join(parts)

    def __repr__(self):
        return 'DiffOp({})'.format(self)


@lru_cache(maxsize=None)
def _shifted_d_power(order, exponent):
    """
    (d - e/x)^order as {j: coefficient}, i.e. x^e * d^order * x^(-e).
    """
    if order == 0:
        return {0: RatFunc.one()}
    prev = _shifted_d_power(order - 1, exponent)
    shift = RatFunc.x_power(-1, -exponent)
    step = {1: RatFunc.one()}
    if shift:
        step[0] = shift
    return _compose_parts(step, prev)


def _leibniz(c, j, e, k, acc):
    """Accumulate c*d^j o e*d^k into acc."""
    derivative = e
    for i in range(j + 1):
        if not derivative:
            break
        key = j - i + k
        term = (c * derivative).scale(comb(j, i))
        acc[key] = acc[key] + term if key in acc else term
        derivative = derivative.diff()


def _compose_parts(left, right):
    acc = {}
    for j, c in left.items():
        for k, e in right.items():
            _leibniz(c, j, e, k, acc)
    return _clean(acc)


def compose(lhs, rhs):
    """
    Normal-ordered product lhs o rhs.
    """
    acc = {}
    for (s, j), c in lhs.terms.items():
        for (t, k), e in rhs.terms.items():
            if t:
                # d^j x^(t*a) = x^(t*a) (d + t*a/x)^j
                moved = {i: c * ci for i, ci in _shifted_d_power(j, -t * A).items()}
            else:
                moved = {j: c}
            for order, coeff in _compose_parts(moved, {k: e}).items():
                key = (s + t, order)
                acc[key] = acc[key] + coeff if key in acc else coeff
    return DiffOp(acc)


def commutator(lhs, rhs):
    return compose(lhs, rhs) - compose(rhs, lhs)


def conjugate_by_power(op, exponent):
    """
    x^e o op o x^(-e) for a ParamScalar exponent e, by d -> d - e/x.
    """
    exponent = param(exponent)
    acc = {}
    for (s, j), c in op.terms.items():
        for i, ci in _shifted_d_power(j, exponent).items():
            key = (s, i)
            coeff = c * ci
            acc[key] = acc[key] + coeff if key in acc else coeff
    return DiffOp(acc)


def falling_factorial(value, j):
    result = PDOM.one
    for i in range(j):
        result = result * (value - i)
    return result


def act_quasi(op, poly):
    """
    Apply op to a QuasiPoly using d x^e = e x^(e-1) with e carried exactly.

    Raises NonLaurentCoefficient unless every coefficient is num(x)/x^k.
    """
    pairs = []
    for (s, j), c in op.terms.items():
        k, numerator = c.laurent()
        for exponent, coeff in poly.terms.items():
            weight = coeff * falling_factorial(exponent.value(), j)
            if not weight:
                continue
            for i, ci in enumerate(numerator):
                if ci:
                    pairs.append((exponent + QuasiExponent(i - k - j, s), weight * ci))
    return QuasiPoly.from_pairs(pairs)


def act_poly(op, poly):
    """
    Apply a shift-free op to a polynomial (or rational function) of x.
    """
    if not isinstance(poly, RatFunc):
        poly = RatFunc.from_coeffs(poly)
    if not op.is_shift_free():
        raise PreconditionError('operator with x^(s*a) factors cannot act on rational functions')
    result = RatFunc.zero()
    derivatives = [poly]
    for (_, j), c in sorted(op.terms.items(), key=lambda item: item[0][1]):
        while len(derivatives) <= j:
            derivatives.append(derivatives[-1].diff())
        result = result + c * derivatives[j]
    return result
