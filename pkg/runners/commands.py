"""
The engine behind each subcommand. Every command fills a Report; engine
errors on user input propagate to the runner.
"""
import logging
from fractions import Fraction
from types import SimpleNamespace

from base import BaseSpace, ClosureFailure, MappingContractViolated, PreconditionError
from calculus import DiffOp, commutator
from dsl import evaluate_source, split_top_level
from extension import (Lame, MatOp, QuadSpace, RatioSqrt, SqrtP2, algebraic_spectrum, lame_pullback, lame_space, lift,
                       printed_forms, s_generators, spectrum_samples)
from kernel import format_scalar, is_constant, is_param, to_fraction
from algebra import closure_check, fit_poly_in_J0
from spaces import (P, V1Space, make_bosonic, make_jumps, make_k, make_kernels, make_mixing, make_sl2,
                    reverify, search_preserving)

__all__ = ['COMMANDS', 'SPACE_TYPES', 'parse_space', 'space_of', 'parse_op', 'on_space', 'check', 'comm', 'closure', 'fit', 'search', 'lame',
           'catalog']

logger = logging.getLogger(__name__)

# space types a config may name under "space"
SPACE_TYPES = SimpleNamespace(V1=V1Space, P=P, SqrtP2=SqrtP2, RatioSqrt=RatioSqrt, Lame=Lame)


def parse_space(src):
    space = evaluate_source(src)
    if not isinstance(space, BaseSpace):
        raise PreconditionError('{!r} is not a space'.format(src))
    return space


def space_of(args, config):
    """The --space expression, else the space configured under "space"."""
    if args.space:
        return parse_space(args.space)
    if 'space' in config:
        return config.init_obj('space', SPACE_TYPES)
    raise PreconditionError('no --space given and none configured')


def on_space(op, space):
    """``op`` in the form that acts on ``space``: DiffOps are lifted on quad spaces."""
    if isinstance(space, QuadSpace) and isinstance(op, DiffOp):
        return lift(op, space.r)
    if isinstance(op, MatOp) and not isinstance(space, QuadSpace):
        raise PreconditionError('{} acts on p + f q pairs, not on {}'.format(op, space))
    return op


def parse_op(src, space=None):
    value = evaluate_source(src, space)
    if isinstance(value, BaseSpace):
        raise PreconditionError('{!r} is a space, expected an operator'.format(src))
    if is_param(value):
        value = DiffOp.scalar(value)
    return on_space(value, space) if space is not None else value


def _matrix(space, op):
    return [[format_scalar(c) for c in row] for row in zip(*space.matrix(op))]


def _describe(space):
    return {'space': str(space), 'dim': space.dim(), 'basis': [str(label) for label in space.basis()]}


def _parameter(space):
    """The parameter sampled by the Killing form classification."""
    params = getattr(space, 'params', {})
    return next(iter(params), 'a')


def check(args, config, report):
    space = space_of(args, config)
    op = parse_op(args.op, space)
    result = space.check_invariance(op)
    report.verdict('invariant', result.verdict, result.witnesses)
    report.normal_forms['op'] = op
    report.data.update(_describe(space))
    if result.verdict:
        report.data['matrix'] = _matrix(space, op)


def comm(args, config, report):
    space = parse_space(args.space) if args.space else None
    lhs, rhs = parse_op(args.op1, space), parse_op(args.op2, space)
    if isinstance(lhs, MatOp) or isinstance(rhs, MatOp):
        result = lhs.commutator(rhs)
    else:
        result = commutator(lhs, rhs)
    report.normal_forms['comm'] = result
    report.data['vanishes'] = not result
    if space is not None:
        on = space.check_invariance(result)
        report.data.update(_describe(space))
        report.data['preserves'] = on.verdict
        if on.verdict:
            report.data['matrix'] = _matrix(space, result)
            report.data['on_space_zero'] = all(entry == '0' for row in report.data['matrix'] for entry in row)


def closure(args, config, report):
    space = space_of(args, config)
    sources = split_top_level(args.gens)
    gens = [parse_op(src, space) for src in sources]
    j0 = parse_op(args.j0, space) if args.j0 else None
    for src, op in zip(sources, gens):
        result = space.check_invariance(op)
        report.verdict('preserves {}'.format(src), result.verdict, result.witnesses)
    if not report.status:
        return
    try:
        outcome = closure_check(gens, space, names=sources, j0=j0, param_name=_parameter(space),
                                samples=config['killing_samples'])
    except ClosureFailure as err:
        names = sources + ['1']
        pair = '[{}, {}]'.format(*(names[i - 1] for i in err.pair))
        report.verdict('closes', False, [(pair, err.residual)])
        return
    report.verdict('closes', True)
    report.verdict('antisymmetric', outcome.antisymmetric)
    report.verdict('jacobi', outcome.jacobi)
    report.data.update(_describe(space))
    report.data['closure'] = outcome.to_dict()


def fit(args, config, report):
    space = space_of(args, config)
    op, j0 = parse_op(args.op, space), parse_op(args.j0, space)
    max_deg = args.maxdeg if args.maxdeg is not None else config['fit']['max_deg']
    result = fit_poly_in_J0(op, j0, space, max_deg=max_deg, max_raise=config['fit']['max_raise'])
    report.verdict('fit', result.ok, [result.witness] if result.witness else [])
    report.normal_forms['op'] = op
    report.normal_forms['in'] = j0
    report.data.update(_describe(space))
    report.data['fit'] = result.to_dict()


def _window(text):
    try:
        lo, hi = (int(part) for part in text.split(':'))
    except ValueError:
        raise PreconditionError('degree window must read LO:HI, got {!r}'.format(text)) from None
    if lo > hi:
        raise PreconditionError('empty degree window {}'.format(text))
    return lo, hi


def search(args, config, report):
    space = space_of(args, config)
    if not isinstance(space, V1Space):
        raise PreconditionError('search runs on monomial spaces; use catalog for {}'.format(space))
    lo, hi = _window(args.deg)
    settings = config['search']
    ops = search_preserving(space, args.max_order, lo, hi, resample_count=0)
    report.verdict('self_consistent', all(space.check_invariance(op).verdict for op in ops))
    report.data.update(_describe(space))
    report.data['dimension'] = len(ops)
    report.data['operators'] = [str(op) for op in ops]
    if space.generic and not space.is_plain and settings['resample_count']:
        outcome = reverify(space, ops, (args.max_order, lo, hi), settings['resample_count'],
                           settings['seed'], settings['resonance_margin'])
        report.verdict('resample_agrees', all(dim == len(ops) and ok for _, dim, ok in outcome),
                       [('a={}'.format(point), 'dimension {}'.format(dim), 'preserved' if ok else 'fails')
                        for point, dim, ok in outcome if dim != len(ops) or not ok])
        report.data['resamples'] = [{'a': point, 'dimension': dim, 'preserved': ok} for point, dim, ok in outcome]


def _k2(text):
    if text is None or text.strip() == 'k2':
        return None
    try:
        return Fraction(text.strip())
    except ValueError:
        raise PreconditionError('k2 must be a rational number or k2, got {!r}'.format(text)) from None


def lame(args, config, report):
    k2 = _k2(args.k2)
    space = lame_space(args.n, k2)
    op = lame_pullback(args.n, k2)
    result = space.check_invariance(op)
    report.verdict('invariant', result.verdict, result.witnesses)
    report.normal_forms['H'] = op
    report.data.update(_describe(space))
    if not (args.spectrum and result.verdict):
        return
    coeffs = algebraic_spectrum(op, space)
    degree = len(coeffs) - 1
    report.data['charpoly'] = [format_scalar(c) for c in coeffs]
    report.data['degree'] = degree
    if all(is_constant(c) for c in coeffs):
        points = [to_fraction(space.params['k2'])]
    else:
        points = [Fraction(p) for p in config['lame']['k2_samples']]
    samples = spectrum_samples(coeffs, 'k2', points)
    report.verdict('real_distinct', all(count == degree and squarefree for _, count, squarefree in samples),
                   [('k2={}'.format(point), '{} real roots'.format(count)) for point, count, squarefree in samples
                    if count != degree or not squarefree])
    report.data['samples'] = [{'k2': point, 'real_roots': count, 'squarefree': squarefree}
                              for point, count, squarefree in samples]


def _entry(report, space, name, op, claimed):
    result = space.check_invariance(op)
    if claimed:
        report.verdict('{} preserves'.format(name), result.verdict, result.witnesses)
    return {'name': name, 'op': str(op), 'preserves': result.verdict}


def _monomial_catalog(space, report):
    entries = []
    n, m, a = space.n, space.m, space.a
    if space.is_plain:
        for name, op in zip(('jp', 'j0', 'jm'), make_sl2(n)):
            entries.append(_entry(report, space, name, op, True))
        return entries
    sl2, k = make_sl2(n), make_k(m, a)
    for name, op in zip(('jp', 'j0', 'jm'), sl2):
        entries.append(_entry(report, space, name, op, False))
    for name, op in zip(('Jp', 'J0', 'Jm'), make_bosonic(n, m, a)):
        entries.append(_entry(report, space, name, op, True))
    kernels = make_kernels(n, m, a)
    entries.append(_entry(report, space, 'K', kernels.K, True))
    entries.append(_entry(report, space, 'Kp', kernels.Kp, True))
    for name, op in zip(('jp*Kp', 'j0*Kp', 'jm*Kp'), sl2):
        entries.append(_entry(report, space, name, op * kernels.Kp, True))
    for name, op in zip(('kp*K', 'k0*K', 'km*K'), k):
        entries.append(_entry(report, space, name, op * kernels.K, True))
    for alpha in range(space.delta + 1):
        try:
            mixing = make_mixing(n, m, a, alpha)
        except (PreconditionError, MappingContractViolated) as err:
            logger.info('no mixing operators at alpha=%d on %s: %s', alpha, space, err)
            continue
        entries.append(_entry(report, space, 'Q_{}'.format(alpha), mixing.Q, True))
        entries.append(_entry(report, space, 'Qb_{}'.format(alpha), mixing.Qbar, True))
    if space.rational:
        try:
            jumps = make_jumps(n, m, space.a_value)
        except PreconditionError as err:
            logger.info('no jump operators on %s: %s', space, err)
        else:
            entries.append(_entry(report, space, 'Wp', jumps.plus, True))
            entries.append(_entry(report, space, 'Wm', jumps.minus, True))
    return entries


def _quad_catalog(space, report, windows):
    family = s_generators(space, windows)
    entries = [_entry(report, space, 'S_{}'.format(i + 1), op, True) for i, op in enumerate(family[:-1])]
    if 'lambda' in space.params:
        for name, op, result, coeffs in printed_forms(space, family):
            entries.append({'name': 'printed {}'.format(name), 'op': str(op), 'preserves': result.verdict,
                            'in_family': coeffs is not None,
                            'witnesses': [[str(part) for part in w] for w in result.witnesses]})
    return entries


def catalog(args, config, report):
    space = space_of(args, config)
    report.data.update(_describe(space))
    if isinstance(space, QuadSpace):
        report.data['generators'] = _quad_catalog(space, report, dict(config['quad']))
    else:
        report.data['generators'] = _monomial_catalog(space, report)


COMMANDS = {
    'check': check,
    'comm': comm,
    'closure': closure,
    'fit': fit,
    'search': search,
    'lame': lame,
    'catalog': catalog,
}
