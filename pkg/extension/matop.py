"""
Operators on p + f q as 2x2 matrices of DiffOp acting on the column (p, q).

Everything involving f goes through three images:
x -> diag(x, x), d -> [[d, 0], [0, d + r'/(2r)]], f -> [[0, r], [1, 0]].
"""
from base.base_errors import PreconditionError
from calculus import DiffOp, act_poly
from kernel import param
from .quad_space import QuadElement

__all__ = ['MatOp', 'lift', 'act']


class MatOp:
    __slots__ = ('entries', 'r')

    def __init__(self, entries, r):
        entries = tuple(e if isinstance(e, DiffOp) else DiffOp.mult(e) for e in entries)
        assert len(entries) == 4, 'a MatOp has four entries'
        object.__setattr__(self, 'entries', entries)
        object.__setattr__(self, 'r', r)

    def __setattr__(self, key, value):
        raise AttributeError('MatOp is immutable')

    # the three generating images

    @classmethod
    def diag(cls, op, r):
        return cls((op, DiffOp.zero(), DiffOp.zero(), op), r)

    @classmethod
    def identity(cls, r):
        return cls.diag(DiffOp.identity(), r)

    @classmethod
    def scalar(cls, value, r):
        return cls.diag(DiffOp.scalar(value), r)

    @classmethod
    def x(cls, r):
        return cls.diag(DiffOp.x(), r)

    @classmethod
    def d(cls, r):
        log_derivative = r.diff() / (r * 2)
        return cls((DiffOp.d(), DiffOp.zero(), DiffOp.zero(), DiffOp.d() + DiffOp.mult(log_derivative)), r)

    @classmethod
    def f(cls, r):
        return cls((DiffOp.zero(), DiffOp.mult(r), DiffOp.identity(), DiffOp.zero()), r)

    # algebra

    def _check(self, other):
        if self.r != other.r:
            raise PreconditionError('operators over different extensions f^2 = {} and f^2 = {}'.format(self.r, other.r))

    def _coerce(self, other):
        if isinstance(other, MatOp):
            self._check(other)
            return other
        if isinstance(other, DiffOp):
            return lift(other, self.r)
        return MatOp.scalar(other, self.r)

    def __add__(self, other):
        other = self._coerce(other)
        return MatOp(tuple(u + v for u, v in zip(self.entries, other.entries)), self.r)

    __radd__ = __add__

    def __neg__(self):
        return MatOp(tuple(-e for e in self.entries), self.r)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, scalar):
        scalar = param(scalar)
        return MatOp(tuple(e.scale(scalar) for e in self.entries), self.r)

    def __mul__(self, other):
        other = self._coerce(other)
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MatOp((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h), self.r)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, k):
        result = MatOp.identity(self.r)
        for _ in range(k):
            result = result * self
        return result

    def commutator(self, other):
        other = self._coerce(other)
        return self * other - other * self

    def specialize(self, name, point):
        return MatOp(tuple(e.specialize(name, point) for e in self.entries), self.r.specialize(name, point))

    def act(self, element):
        a, b, c, d = self.entries
        p, q = element.p, element.q
        return QuadElement(act_poly(a, p) + act_poly(b, q), act_poly(c, p) + act_poly(d, q))

    def __eq__(self, other):
        return isinstance(other, MatOp) and self.r == other.r and self.entries == other.entries

    def __hash__(self):
        return hash((self.entries, self.r))

    def __str__(self):
        return '[[{}, {}], [{}, {}]]'.format(*self.entries)

    __repr__ = __str__


def lift(op, r):
    """
    Image of a shift-free DiffOp sum_j c_j(x) d^j as sum_j diag(c_j) lift(d)^j.
    """
    if isinstance(op, MatOp):
        return op
    if not isinstance(op, DiffOp):
        return MatOp.scalar(op, r)
    if not op.is_shift_free():
        raise PreconditionError('operators with x^(s*a) factors do not act on p + f q')
    d = MatOp.d(r)
    result = MatOp.diag(DiffOp.zero(), r)
    power, order = MatOp.identity(r), 0
    for j in range(op.order() + 1):
        while order < j:
            power, order = power * d, order + 1
        c = op.coefficient(j)
        if c:
            result = result + MatOp.diag(DiffOp.mult(c), r) * power
    return result


def act(op, element):
    return op.act(element)
