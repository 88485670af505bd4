"""
Exact linear algebra over the parameter field, and Sturm root counting.
"""
import logging
from fractions import Fraction

from sympy import Poly, QQ, Rational, sturm
from sympy.polys.matrices import DomainMatrix

from .ratfunc import X_SYMBOL
from .scalars import PDOM, param, to_qq

__all__ = ['rref', 'nullspace', 'solve', 'charpoly', 'count_real_roots', 'sign_variations', 'is_squarefree']

logger = logging.getLogger(__name__)


def rref(rows, ncols):
    """
    Reduced row echelon form of a matrix given as a list of rows.

    :return: (reduced rows, tuple of pivot columns)
    """
    if not rows:
        return [], ()
    rows = [[param(c) for c in row] for row in rows]
    matrix = DomainMatrix(rows, (len(rows), ncols), PDOM)
    reduced, pivots = matrix.rref()
    logger.debug('rref of %dx%d system: rank %d', len(rows), ncols, len(pivots))
    return [list(row) for row in reduced.rep.to_ddm()], tuple(pivots)


def nullspace(rows, ncols):
    """
    Basis of {v : rows * v = 0}, one vector per free column.
    """
    reduced, pivots = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [PDOM.zero] * ncols
        vec[f] = PDOM.one
        for i, p in enumerate(pivots):
            vec[p] = -reduced[i][f]
        basis.append(vec)
    return basis


def solve(rows, rhs):
    """
    One solution of rows * v = rhs with free unknowns set to zero,
    or None when the system is inconsistent.
    """
    ncols = len(rows[0]) if rows else 0
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    solution = [PDOM.zero] * ncols
    for i, p in enumerate(pivots):
        solution[p] = reduced[i][ncols]
    return solution


def charpoly(rows):
    """
    Coefficients of det(E*I - M), highest degree first.
    """
    size = len(rows)
    matrix = DomainMatrix([[param(c) for c in row] for row in rows], (size, size), PDOM)
    return list(matrix.charpoly())


def _as_poly(coeffs):
    return Poly([to_qq(Fraction(c)) for c in coeffs], X_SYMBOL, domain=QQ)


def sign_variations(values):
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _sturm_signs(chain, point):
    if point == 'inf' or point == '-inf':
        out = []
        for p in chain:
            lead = p.LC()
            if point == '-inf' and p.degree() % 2:
                lead = -lead
            out.append(lead)
        return out
    return [p.eval(Rational(point.numerator, point.denominator)) for p in chain]


def count_real_roots(coeffs, lo='-inf', hi='inf'):
    """
    Number of distinct real roots in (lo, hi] of the rational polynomial with
    the given coefficients (highest first), by sign variations of its Sturm
    sequence.
    """
    poly = _as_poly(coeffs)
    if poly.degree() <= 0:
        return 0
    chain = sturm(poly)
    lo = lo if isinstance(lo, str) else Fraction(lo)
    hi = hi if isinstance(hi, str) else Fraction(hi)
    return sign_variations(_sturm_signs(chain, lo)) - sign_variations(_sturm_signs(chain, hi))


def is_squarefree(coeffs):
    poly = _as_poly(coeffs)
    return poly.degree() <= 0 or poly.discriminant() != 0
