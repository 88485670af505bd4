"""
The Lame operator -d^2/dz^2 + N(N+1) k2 sn^2 with N = (4n+1)/2, conjugated
by sqrt(cn + dn) and written in x = sn^2, acting on p + cn*dn q.
"""
import logging
from fractions import Fraction

from calculus import DiffOp
from kernel import RatFunc, charpoly, count_real_roots, is_squarefree, param, specialize_scalar, to_fraction
from .matop import MatOp
from .quad_space import Lame

__all__ = ['lame_level', 'lame_pullback', 'lame_space', 'algebraic_spectrum', 'spectrum_samples']

logger = logging.getLogger(__name__)


def lame_space(n, k2=None):
    return Lame(n, k2)


def lame_level(n):
    """N for which p(sn^2) + cn*dn q(sn^2) with deg p <= n, deg q <= n-1 is invariant."""
    return Fraction(4 * n + 1, 2)


def lame_pullback(n, k2=None):
    """
    With f = cn*dn, d/dz = 2 sqrt(x) f d/dx and the gauge term
    (sqrt(cn + dn))'/sqrt(cn + dn) = -(1 - f)/(2 sqrt(x)), the conjugated
    d/dz is T = sqrt(x) A + B/sqrt(x) with A = 2 f d, B = (f - 1)/2, so

        T^2 = x A^2 + f A + A B + B A + (B^2 - f B)/x

    where (B^2 - f B)/x = (1 - r)/(4x) = ((1 + k2) - k2 x)/4.
    """
    space = lame_space(n, k2)
    r = space.r
    k2 = space.params['k2']
    x, d, f, identity = MatOp.x(r), MatOp.d(r), MatOp.f(r), MatOp.identity(r)
    a = (f * d).scale(2)
    b = (f - identity).scale(Fraction(1, 2))
    tail = MatOp.diag(DiffOp.mult(RatFunc.from_coeffs([(1 + k2) / 4, -k2 / 4])), r)
    t_squared = x * a * a + f * a + a * b + b * a + tail
    level = lame_level(n)
    potential = MatOp.diag(DiffOp.mult(RatFunc.x_power(1, k2 * param(level * (level + 1)))), r)
    return -t_squared + potential


def algebraic_spectrum(op, space):
    """
    Characteristic polynomial det(E - M) of ``op`` restricted to ``space``,
    coefficients highest first.

    :raises InvarianceFailure: if ``op`` leaves ``space``
    """
    columns = space.matrix(op)
    rows = [list(row) for row in zip(*columns)]
    coeffs = charpoly(rows)
    logger.info('characteristic polynomial of degree %d on %s', len(coeffs) - 1, space)
    return coeffs


def spectrum_samples(coeffs, name, points):
    """
    Real-root count and squarefreeness of the characteristic polynomial at
    rational values of one parameter.

    :return: list of (point, number of distinct real roots, squarefree)
    """
    rows = []
    for point in points:
        values = [to_fraction(specialize_scalar(c, name, point)) for c in coeffs]
        rows.append((Fraction(point), count_real_roots(values), is_squarefree(values)))
    return rows
