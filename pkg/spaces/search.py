"""
Bounded-order classification of the operators preserving a monomial space.

The ansatz is sum_{j <= max_order} sum_{deg_lo <= i <= deg_hi} c_ij x^(i+j) d^j:
the term (i, j) maps x^e to e(e-1)...(e-j+1) x^(e+i), so i is the net degree
it adds to every monomial.
"""
import logging
from collections import defaultdict
from fractions import Fraction

import numpy as np

from calculus import DiffOp, falling_factorial
from kernel import PDOM, RatFunc, nullspace, solve

__all__ = ['search_preserving', 'reverify', 'nonresonant_points', 'in_span']

logger = logging.getLogger(__name__)


def _ansatz(max_order, deg_lo, deg_hi):
    return [(i, j) for j in range(max_order + 1) for i in range(deg_lo, deg_hi + 1)]


def _constraints(space, unknowns):
    """One row per (basis monomial, output exponent outside the space)."""
    rows = []
    for exponent in space.basis():
        value = exponent.value()
        outside = defaultdict(lambda: [PDOM.zero] * len(unknowns))
        for col, (i, j) in enumerate(unknowns):
            target = exponent + i
            if space.contains(target):
                continue
            outside[target][col] = falling_factorial(value, j)
        rows.extend(row for row in outside.values() if any(row))
    return rows


def _assemble(unknowns, vector):
    terms = {}
    for (i, j), c in zip(unknowns, vector):
        if c:
            terms[(0, j)] = terms.get((0, j), RatFunc.zero()) + RatFunc.x_power(i + j, c)
    return DiffOp(terms)


def search_preserving(space, max_order, deg_lo, deg_hi, resample_count=2, seed=None, margin=2):
    """
    Basis of the operators of the ansatz that preserve ``space``.

    At the formal a the elimination runs over the parameter field; the result
    is then re-checked at ``resample_count`` nonresonant rational values of a.
    """
    unknowns = _ansatz(max_order, deg_lo, deg_hi)
    rows = _constraints(space, unknowns)
    logger.debug('search on %s: %d unknowns, %d constraints', space, len(unknowns), len(rows))
    ops = [_assemble(unknowns, vector) for vector in nullspace(rows, len(unknowns))]
    for op in ops:
        assert space.check_invariance(op).verdict, 'search returned {} which leaves {}'.format(op, space)
    logger.info('%d preserving operators on %s (order <= %d, degrees %d..%d)',
                len(ops), space, max_order, deg_lo, deg_hi)
    if space.generic and not space.is_plain and resample_count:
        reverify(space, ops, (max_order, deg_lo, deg_hi), resample_count, seed, margin)
    return ops


def nonresonant_points(space, count, seed=None, margin=2):
    """
    Rational values of a avoiding the integers in [-(m+n+margin), m+n+margin].
    """
    rng = np.random.default_rng(seed)
    bound = space.m + space.n + margin
    points = []
    while len(points) < count:
        candidate = Fraction(int(rng.integers(-4 * bound - 8, 4 * bound + 9)), int(rng.integers(1, 8)))
        if candidate.denominator == 1 and abs(candidate) <= bound:
            continue
        if candidate not in points:
            points.append(candidate)
    return points


def reverify(space, ops, window, count=2, seed=None, margin=2):
    """
    Re-run a generic search at nonresonant specializations of a.

    :return: list of (point, dimension at the point, all generic operators preserve the specialized space)
    """
    outcome = []
    for point in nonresonant_points(space, count, seed, margin):
        special = space.specialize(point)
        dimension = len(search_preserving(special, *window, resample_count=0))
        preserved = all(special.check_invariance(op).verdict for op in ops)
        if dimension != len(ops):
            logger.warning('search on %s: dimension %d at a=%s, %d at formal a', space, dimension, point, len(ops))
        if not preserved:
            logger.warning('search on %s: a generic solution fails at a=%s', space, point)
        outcome.append((point, dimension, preserved))
    return outcome


def _vectorize(op):
    vec = {}
    for (s, j), c in op.terms.items():
        k, numerator = c.laurent()
        for power, coeff in enumerate(numerator):
            if coeff:
                vec[(s, j, power - k)] = coeff
    return vec


def in_span(op, ops):
    """
    Coefficients expressing ``op`` in terms of ``ops``, or None.
    """
    vectors = [_vectorize(o) for o in ops]
    target = _vectorize(op)
    keys = sorted(set(target).union(*vectors))
    if not keys:
        return [PDOM.zero] * len(ops)
    if not ops:
        return None
    rows = [[v.get(key, PDOM.zero) for v in vectors] for key in keys]
    return solve(rows, [target.get(key, PDOM.zero) for key in keys])
