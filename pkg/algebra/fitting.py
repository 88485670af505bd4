"""
Fitting operators as polynomials in a diagonal operator, on a space.
"""
import logging
from dataclasses import dataclass, field

from base.base_errors import PreconditionError
from kernel import PDOM, format_scalar, solve

__all__ = ['FitResult', 'fit_poly_in_J0', 'diagonal']

logger = logging.getLogger(__name__)


@dataclass
class FitResult:
    """
    ``coeffs`` are c_0, ..., c_deg of sum_k c_k J0^k. On failure ``witness``
    is (basis element, residual) with the residual printed exactly.
    """
    ok: bool
    coeffs: list = field(default_factory=list)
    degree: int = -1
    witness: tuple = None

    def to_dict(self):
        return {
            'ok': self.ok,
            'degree': str(self.degree),
            'coeffs': [format_scalar(c) for c in self.coeffs],
            'witness': None if self.witness is None else [str(w) for w in self.witness],
        }


def diagonal(op, space):
    """
    Eigenvalues of ``op`` on the basis, or (None, witness) if ``op`` is not diagonal there.
    """
    values = []
    for index, label in enumerate(space.basis()):
        coords, outside = space.coordinates(space.apply(op, index))
        off = [(str(term), coeff) for term, coeff in outside]
        off += [(str(space.basis()[k]), format_scalar(c)) for k, c in enumerate(coords) if c and k != index]
        if off:
            return None, (label, off[0][0], off[0][1])
        values.append(coords[index])
    return values, None


def _powers(value, degree):
    """1, value, ..., value^degree; sympy refuses 0**0."""
    row = [PDOM.one]
    for _ in range(degree):
        row.append(row[-1] * value)
    return row


def _vandermonde(eigen, degree):
    return [_powers(value, degree) for value in eigen]


def _partial_fit(eigen, targets, degree):
    """Longest prefix of the conditions that a polynomial of ``degree`` satisfies."""
    rows = _vandermonde(eigen, degree)
    coeffs = [PDOM.zero] * (degree + 1)
    for count in range(1, len(rows) + 1):
        found = solve(rows[:count], targets[:count])
        if found is None:
            return coeffs, count - 1
        coeffs = found
    return coeffs, len(rows)


def fit_poly_in_J0(op, j0, space, max_deg=3, max_raise=None):
    """
    Coefficients c_k with op = sum_k c_k j0^k on every basis vector of ``space``.

    When no polynomial of degree ``max_deg`` fits, the degree is raised (with
    a warning) up to ``max_raise``, by default dim - 1.
    """
    eigen, witness = diagonal(j0, space)
    if eigen is None:
        raise PreconditionError('{} does not act diagonally on {}: {}'.format(j0, space, witness))
    targets, witness = diagonal(op, space)
    if targets is None:
        logger.info('fit on %s fails: operator is not diagonal', space)
        return FitResult(ok=False, witness=witness)
    ceiling = max(max_deg, space.dim() - 1 if max_raise is None else max_raise)
    for degree in range(max_deg, ceiling + 1):
        coeffs = solve(_vandermonde(eigen, degree), targets)
        if coeffs is not None:
            if degree > max_deg:
                logger.warning('no polynomial fit of degree %d on %s; fitted at degree %d', max_deg, space, degree)
            return FitResult(ok=True, coeffs=coeffs, degree=degree)
    coeffs, good = _partial_fit(eigen, targets, ceiling)
    residual = targets[good] - sum((c * p for c, p in zip(coeffs, _powers(eigen[good], ceiling))), PDOM.zero)
    logger.info('fit on %s fails at degree %d', space, ceiling)
    return FitResult(ok=False, coeffs=coeffs, degree=ceiling,
                     witness=(space.basis()[good], format_scalar(residual)))
