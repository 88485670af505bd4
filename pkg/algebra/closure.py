"""
Commutator tables, structure constants and the Killing form of a family of
operators preserving a space.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from base.base_errors import ClosureFailure, PreconditionError
from calculus import DiffOp
from kernel import (PDOM, charpoly, depends_on, format_scalar, is_constant, rref, sign_variations, solve,
                    specialize_scalar, to_fraction)
from .fitting import fit_poly_in_J0

__all__ = ['TableEntry', 'ClosureReport', 'closure_check', 'signature', 'classify']

logger = logging.getLogger(__name__)

COMPACT = 'compact so(3)'
SPLIT = 'split so(2,1) = sl(2,R)'
DEGENERATE = 'degenerate'


@dataclass
class TableEntry:
    """
    [g_i, g_j] as a linear combination of the family ('linear'), as a
    polynomial in J0 ('polynomial'), or outside both ('outside').
    """
    kind: str
    coeffs: list = field(default_factory=list)
    residual: str = None

    def negated(self):
        return TableEntry(self.kind, [-c for c in self.coeffs], self.residual)

    def to_dict(self):
        return {'kind': self.kind, 'coeffs': [format_scalar(c) for c in self.coeffs], 'residual': self.residual}


@dataclass
class ClosureReport:
    names: list
    table: dict
    antisymmetric: bool = True
    jacobi: bool = True
    killing: list = None
    signatures: list = field(default_factory=list)
    real_form: str = None

    @property
    def verdict(self):
        return self.antisymmetric and self.jacobi

    def to_dict(self):
        return {
            'names': self.names,
            'table': {'[{},{}]'.format(self.names[i], self.names[j]): entry.to_dict()
                      for (i, j), entry in sorted(self.table.items())},
            'antisymmetric': self.antisymmetric,
            'jacobi': self.jacobi,
            'killing': None if self.killing is None else [[format_scalar(c) for c in row] for row in self.killing],
            'signatures': [{'point': None if point is None else str(point),
                            'signature': [str(k) for k in sig], 'form': form}
                           for point, sig, form in self.signatures],
            'real_form': self.real_form,
        }


def _vector(space, op):
    return [c for column in space.matrix(op) for c in column]


def _express(vectors, target):
    rows = [list(row) for row in zip(*vectors)]
    return solve(rows, target)


def _identity_like(op, space):
    if isinstance(op, DiffOp):
        return DiffOp.identity()
    return type(op).identity(space.r)


def signature(coeffs):
    """
    (positive, negative, zero) eigenvalue counts of a symmetric matrix from its
    characteristic polynomial, by sign variations (exact for real-rooted polynomials).
    """
    degree = len(coeffs) - 1
    zero = 0
    while zero < degree and coeffs[degree - zero] == 0:
        zero += 1
    mirrored = [c if (degree - i) % 2 == 0 else -c for i, c in enumerate(coeffs)]
    return sign_variations(coeffs), sign_variations(mirrored), zero


def classify(sig):
    positive, negative, zero = sig
    if zero:
        return DEGENERATE
    if positive + negative == 3:
        return COMPACT if not positive or not negative else SPLIT
    return 'signature ({}, {})'.format(positive, negative)


def _killing(constants, indices):
    def trace_product(a, b):
        return sum((constants[a][j][k] * constants[b][k][j] for j in indices for k in indices), PDOM.zero)
    return [[trace_product(a, b) for b in indices] for a in indices]


def _jacobi(constants, size):
    for i in range(size):
        for j in range(i + 1, size):
            for k in range(j + 1, size):
                for target in range(size):
                    total = sum((constants[i][j][l] * constants[l][k][target]
                                 + constants[j][k][l] * constants[l][i][target]
                                 + constants[k][i][l] * constants[l][j][target] for l in range(size)), PDOM.zero)
                    if total:
                        logger.warning('Jacobi identity fails on (%d, %d, %d)', i, j, k)
                        return False
    return True


def _signatures(killing, param_name, samples):
    entries = [c for row in killing for c in row]
    if any(depends_on(c, param_name) for c in entries):
        points = [Fraction(p) for p in samples]
    else:
        points = [None]
    out = []
    for point in points:
        matrix = killing if point is None else [[specialize_scalar(c, param_name, point) for c in row]
                                                for row in killing]
        coeffs = charpoly(matrix)
        if not all(is_constant(c) for c in coeffs):
            logger.info('Killing form depends on further parameters; no signature at %s=%s', param_name, point)
            continue
        sig = signature([to_fraction(c) for c in coeffs])
        out.append((point, sig, classify(sig)))
    return out


def closure_check(gens, space, names=None, j0=None, param_name='lambda', samples=('1/4', '1/2', '3/4')):
    """
    Express every commutator [g_i, g_j] in span(gens + identity) through the
    actions on the basis of ``space``.

    With ``j0`` given, commutators outside the span may instead be polynomials in j0.

    :raises ClosureFailure: for the first commutator that is neither
    """
    ops = list(gens)
    names = list(names or ['g{}'.format(i + 1) for i in range(len(ops))])
    identity = _identity_like(ops[0], space)
    vectors = [_vector(space, op) for op in ops]
    _, pivots = rref([list(row) for row in zip(*vectors)], len(vectors))
    if len(pivots) < len(vectors):
        raise PreconditionError('the operators are linearly dependent on {}'.format(space))
    unit = _vector(space, identity)
    identity_index = next((i for i, v in enumerate(vectors) if v == unit), None)
    if identity_index is None and _express(vectors, unit) is None:
        ops.append(identity)
        names.append('1')
        vectors.append(unit)
        identity_index = len(ops) - 1

    size = len(ops)
    table = {}
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            comm = ops[i] * ops[j] - ops[j] * ops[i]
            coeffs = _express(vectors, _vector(space, comm))
            if coeffs is not None:
                table[(i, j)] = TableEntry('linear', coeffs)
                continue
            fit = fit_poly_in_J0(comm, j0, space) if j0 is not None else None
            if fit is not None and fit.ok:
                table[(i, j)] = TableEntry('polynomial', fit.coeffs)
                continue
            raise ClosureFailure((i + 1, j + 1), str(comm))
    report = ClosureReport(names=names, table=table)
    report.antisymmetric = all(table[(j, i)].coeffs == table[(i, j)].negated().coeffs
                               and table[(j, i)].kind == table[(i, j)].kind for (i, j) in table)
    if any(entry.kind != 'linear' for entry in table.values()):
        logger.info('closure on %s is polynomial; no structure constants', space)
        return report

    zero = [PDOM.zero] * size
    constants = [[table[(i, j)].coeffs if i != j else zero for j in range(size)] for i in range(size)]
    report.jacobi = _jacobi(constants, size)
    indices = [i for i in range(size) if i != identity_index]
    report.killing = _killing(constants, indices)
    report.signatures = _signatures(report.killing, param_name, samples)
    forms = {form for _, _, form in report.signatures}
    if forms:
        report.real_form = forms.pop() if len(forms) == 1 else 'varies: ' + ', '.join(sorted(forms))
    logger.info('closure on %s: antisymmetric=%s jacobi=%s form=%s',
                space, report.antisymmetric, report.jacobi, report.real_form)
    return report
