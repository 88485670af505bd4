"""
Generator catalogue of the monomial spaces: the sl(2) triples, the bosonic
triple, the kernel operators, the subspace-mixing operators and the jumps.
"""
import logging
from collections import namedtuple
from fractions import Fraction

from base.base_errors import MappingContractViolated, PreconditionError
from calculus import DiffOp, conjugate_by_power
from kernel import A, format_scalar, is_constant, linear_in_a, param, to_fraction
from .monomial import V1Space

__all__ = ['Triple', 'Kernels', 'Mixing', 'Jumps', 'make_sl2', 'make_k', 'make_bosonic', 'make_kernels',
           'make_mixing', 'make_jumps', 'a_power', 'shifted_euler']

logger = logging.getLogger(__name__)

Triple = namedtuple('Triple', 'plus zero minus')
Kernels = namedtuple('Kernels', 'K Kp')
Mixing = namedtuple('Mixing', 'Q Qbar orientation')
Jumps = namedtuple('Jumps', 'plus minus')


def shifted_euler(shift):
    """D - shift"""
    return DiffOp.euler() - param(shift)


def _euler_product(shifts):
    result = DiffOp.identity()
    for shift in shifts:
        result = result * shifted_euler(shift)
    return result


def a_power(exponent):
    """
    Multiplication by x^exponent for exponent = c1*a + c0 with integer c1, c0.
    """
    split = linear_in_a(exponent)
    if split is None or any(c.denominator != 1 for c in split):
        raise PreconditionError('x^({}) is not an operator of the calculus'.format(format_scalar(param(exponent))))
    return DiffOp.x_power(int(split[1]), int(split[0]))


def make_sl2(n):
    """
    j+ = x^2 d - n x, j0 = x d - n/2, j- = d
    """
    x = DiffOp.x()
    return Triple(plus=x * x * DiffOp.d() - x.scale(n),
                  zero=DiffOp.euler() - Fraction(n, 2),
                  minus=DiffOp.d())


def make_k(n, a='a'):
    """x^a j x^(-a) for each member of the sl(2) triple."""
    return Triple(*(conjugate_by_power(j, param(a)) for j in make_sl2(n)))


def make_bosonic(n, m, a='a'):
    a = param(a)
    D = DiffOp.euler()
    return Triple(plus=DiffOp.x() * shifted_euler(n) * shifted_euler(m + a),
                  zero=D - Fraction(m + n + 1, 2),
                  minus=shifted_euler(a - 1) * DiffOp.d())


def make_kernels(n, m, a='a'):
    """
    K = D(D-1)...(D-n) annihilates P_n, K' = (D-a)...(D-a-m) annihilates x^a P_m.
    """
    a = param(a)
    return Kernels(K=_euler_product(range(n + 1)),
                   Kp=_euler_product(a + j for j in range(m + 1)))


def _formal(a):
    """The formal a stands in for a rational that x^a cannot carry."""
    a = param(a)
    if is_constant(a) and to_fraction(a).denominator != 1:
        logger.debug('x^(%s) is not rational; building the mixing operators at formal a', a)
        return A
    return a


def _lowering(n, m, alpha):
    delta = abs(m - n)
    shifts = [min(n, m) + 1 + j for j in range(alpha)]
    return _euler_product(shifts) * DiffOp.d(delta - alpha)


def _orientations(n, m, a, alpha):
    kernels = make_kernels(n, m, a)
    raising = DiffOp.x_power(alpha)
    lowering = _lowering(n, m, alpha)
    down, up = a_power(-a), a_power(a)
    yield 'n>=m', raising * down * kernels.K, up * lowering * kernels.Kp
    yield 'n<=m', lowering * down * kernels.K, up * raising * kernels.Kp


def _contract_holds(space, q, qbar):
    lower, upper = (set(part) for part in space.parts())
    for index in range(space.dim()):
        if not set(space.apply(q, index).exponents()) <= lower:
            return False
        if not set(space.apply(qbar, index).exponents()) <= upper:
            return False
    return True


def make_mixing(n, m, a='a', alpha=0):
    """
    Q_alpha maps V1(n, m, a) into P_n, Qbar_alpha maps it into x^a P_m.

    The orientation of the two formulas is the one that satisfies this
    mapping contract on the basis of the space.
    """
    delta = abs(m - n)
    if not 0 <= alpha <= delta:
        raise PreconditionError('alpha must lie in [0, {}], got {}'.format(delta, alpha))
    space = V1Space(n, m, a)
    formal = _formal(a)
    for orientation, q, qbar in _orientations(n, m, formal, alpha):
        if _contract_holds(space, q, qbar):
            logger.debug('mixing operators for %s hold in orientation %s', space, orientation)
            return Mixing(q, qbar, orientation)
    raise MappingContractViolated('mapping contract violated in both orientations for {}, alpha={}'.format(space, alpha))


def make_jumps(n, m, k):
    """
    W+ = x^k prod_{j<k} (D-k-m+j), W- = x^-k prod_{j<=n} (D-j) prod_{0<i<k-n} (D-k-n-i)
    on V1(n, m, k).
    """
    if Fraction(k).denominator != 1 or not (0 < k and n <= k and m - k >= n):
        raise PreconditionError('jumps need a positive integer k with n <= k and m - k >= n, '
                                'got n={}, m={}, k={}'.format(n, m, k))
    k = int(k)
    plus = DiffOp.x_power(k) * _euler_product(k + m - j for j in range(k))
    minus = DiffOp.x_power(-k) * _euler_product(range(n + 1)) * _euler_product(k + n + i for i in range(1, k - n))
    return Jumps(plus, minus)
