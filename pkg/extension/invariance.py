"""
Invariance of p + f q spaces and recovery of their first-order generators.
"""
import logging

from sympy.polys.euclidtools import dup_lcm

from base.base_errors import NoGeneratorFamily, PreconditionError
from calculus import DiffOp
from kernel import PDOM, RatFunc, nullspace, solve
from .matop import MatOp, lift

__all__ = ['DEFAULT_WINDOWS', 'check_invariance_quad', 's_generators', 'ansatz', 'printed_forms', 'printed_generators',
           'express_on']

logger = logging.getLogger(__name__)

DEFAULT_WINDOWS = {'alpha': 1, 'beta': 2, 'gamma': 1, 'delta': 2}


def check_invariance_quad(op, space):
    return space.check_invariance(lift(op, space.r))


def ansatz(space, windows=None):
    """
    Terms of alpha(x) + beta(x) d + f (gamma(x) + delta(x) d), one per
    monomial coefficient: list of ((part, power), MatOp).
    """
    windows = dict(DEFAULT_WINDOWS, **(windows or {}))
    r = space.r
    d, f = MatOp.d(r), MatOp.f(r)
    terms = []
    for part, tail in (('alpha', None), ('beta', d), ('gamma', None), ('delta', d)):
        for power in range(windows[part] + 1):
            term = MatOp.diag(DiffOp.x_power(power), r)
            if tail is not None:
                term = term * tail
            if part in ('gamma', 'delta'):
                term = f * term
            terms.append(((part, power), term))
    return terms


def _polynomial_rows(values, bound):
    """
    Linear conditions on u for sum_u u*values[u] to be a polynomial of degree <= bound.
    """
    common = [PDOM.one]
    for value in values:
        common = dup_lcm(common, list(value.den), PDOM)
    common = RatFunc(common)
    quotients, remainders = [], []
    for value in values:
        numerator = value * common
        assert numerator.is_polynomial(), 'common denominator does not clear {}'.format(value)
        quotient, remainder = numerator.divmod_poly(common)
        quotients.append(quotient.coeffs())
        remainders.append(remainder.coeffs())
    rows = []
    for power in range(max(map(len, remainders), default=0)):
        rows.append([c[power] if power < len(c) else PDOM.zero for c in remainders])
    for power in range(bound + 1, max(map(len, quotients), default=0)):
        rows.append([c[power] if power < len(c) else PDOM.zero for c in quotients])
    return [row for row in rows if any(row)]


def _constraints(space, ops):
    rows = []
    for index in range(space.dim()):
        images = [op.act(space.element(index)) for op in ops]
        rows.extend(_polynomial_rows([image.p for image in images], space.n))
        rows.extend(_polynomial_rows([image.q for image in images], space.m))
    return rows


def s_generators(space, windows=None):
    """
    First-order operators preserving ``space``: a basis of the nonconstant
    solutions of the ansatz followed by the identity.
    """
    terms = ansatz(space, windows)
    ops = [op for _, op in terms]
    rows = _constraints(space, ops)
    # the constant alpha_0 is the identity; fix it to zero
    rows.append([PDOM.one] + [PDOM.zero] * (len(ops) - 1))
    logger.debug('generator search on %s: %d unknowns, %d constraints', space, len(ops), len(rows))
    family = []
    for vector in nullspace(rows, len(ops)):
        member = MatOp.diag(DiffOp.zero(), space.r)
        for c, op in zip(vector, ops):
            if c:
                member = member + op.scale(c)
        family.append(member)
    if len(family) < 3:
        raise NoGeneratorFamily('no three-dimensional family found on {} ({} solutions)'.format(space, len(family)))
    logger.info('%d-dimensional generator family on %s', len(family), space)
    return family + [MatOp.identity(space.r)]


def express_on(space, op, ops):
    """
    Coefficients c with op = sum c_i ops_i as actions on ``space``, or None.
    """
    target = [c for column in space.matrix(op) for c in column]
    vectors = [[c for column in space.matrix(o) for c in column] for o in ops]
    rows = [list(row) for row in zip(*vectors)]
    if not rows:
        return None
    return solve(rows, target)


def printed_generators(space):
    """The three operators as printed for the square root of p2 = (1-x)(1-lambda x)."""
    if 'lambda' not in space.params:
        raise PreconditionError('printed generators are defined for the lambda presets, not {}'.format(space))
    r, n, lam = space.r, space.n, space.params['lambda']
    x, d, f = MatOp.x(space.r), MatOp.d(r), MatOp.f(r)
    p2 = MatOp.diag(DiffOp.mult(RatFunc.from_coeffs([1, -(1 + lam), lam])), r)
    return [
        ('S1', x.scale(n) + p2 * d),
        ('S2', f * (x.scale(n) - x * d)),
        ('S3', f * d),
    ]


def printed_forms(space, family=None):
    """
    Cross-reference of the printed operators against ``space`` and the
    recovered family.

    :return: list of (name, operator, InvarianceReport, coefficients in the family or None)
    """
    family = family if family is not None else s_generators(space)
    rows = []
    for name, op in printed_generators(space):
        report = space.check_invariance(op)
        coeffs = express_on(space, op, family) if report.verdict else None
        if not report.verdict:
            logger.warning('printed %s does not preserve %s: %d witnesses', name, space, len(report.witnesses))
        elif coeffs is None:
            logger.warning('printed %s preserves %s but is outside the recovered family', name, space)
        rows.append((name, op, report, coeffs))
    return rows
