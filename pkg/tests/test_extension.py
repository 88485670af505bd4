from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from base import DegenerateExtension, PreconditionError
from calculus import DiffOp
from extension import (MatOp, QuadElement, QuadSpace, RatioSqrt, SqrtP2, algebraic_spectrum, check_invariance_quad,
                       express_on, lame_level, lame_pullback, lame_space, lift, printed_forms, s_generators, spectrum_samples)
from kernel import RatFunc, param
from algebra import closure_check
from algebra.closure import SPLIT

R = RatFunc.from_coeffs([1, 0, -1])
LETTERS = {'x': DiffOp.x(), 'd': DiffOp.d()}


def test_f_squares_to_r():
    f = MatOp.f(R)
    assert f * f == MatOp.diag(DiffOp.mult(R), R)


def test_derivative_of_f():
    d, f = MatOp.d(R), MatOp.f(R)
    log_derivative = R.diff() / (R * 2)
    assert d.commutator(f) == MatOp.diag(DiffOp.mult(log_derivative), R) * f


def test_action_examples():
    f, d = MatOp.f(R), MatOp.d(R)
    assert f.act(QuadElement.of(p=[1])) == QuadElement.of(q=[1])
    assert f.act(QuadElement.of(q=[0, 1])) == QuadElement(R * RatFunc.x_power(1), RatFunc.zero())
    assert d.act(QuadElement.of(q=[1])) == QuadElement(RatFunc.zero(), R.diff() / (R * 2))
    assert MatOp.x(R).act(QuadElement.of([1], [0, 1])) == QuadElement.of([0, 1], [0, 0, 1])


@settings(max_examples=200)
@given(st.lists(st.sampled_from(sorted(LETTERS)), min_size=1, max_size=6))
def test_lift_is_a_homomorphism(word):
    product, lifted = DiffOp.identity(), MatOp.identity(R)
    for letter in word:
        product = product * LETTERS[letter]
        lifted = lifted * lift(LETTERS[letter], R)
    assert lift(product, R) == lifted


@settings(max_examples=200)
@given(st.lists(st.sampled_from('xdf'), min_size=1, max_size=6),
       st.lists(st.integers(-3, 3), min_size=1, max_size=3),
       st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_words_with_f_act_letter_by_letter(word, p, q):
    images = {'x': MatOp.x(R), 'd': MatOp.d(R), 'f': MatOp.f(R)}
    element = QuadElement.of(p, q)
    product, image = MatOp.identity(R), element
    for letter in word:
        product = product * images[letter]
    for letter in reversed(word):
        image = images[letter].act(image)
    assert product.act(element) == image


def test_lift_rejects_shifted_operators():
    with pytest.raises(PreconditionError):
        lift(DiffOp.x_power(0, 1), R)


def test_degenerate_extensions():
    with pytest.raises(DegenerateExtension):
        QuadSpace(RatFunc.from_coeffs([1, 2, 1]), 1, 1)
    with pytest.raises(DegenerateExtension):
        QuadSpace(RatFunc.zero(), 1, 1)
    with pytest.raises(DegenerateExtension):
        lame_space(1, 1)


def test_quad_basis_and_coordinates():
    space = SqrtP2(2)
    assert [str(label) for label in space.basis()] == ['x^0', 'x^1', 'x^2', 'f*x^0', 'f*x^1']
    coords, outside = space.coordinates(QuadElement.of([0, 3], [0, 0, 1]))
    assert coords[1] == 3 and not any(coords[3:])
    assert [str(term) for term, _ in outside] == ['f*x^2']


def test_derivative_does_not_preserve_sqrt_space():
    assert not check_invariance_quad(DiffOp.d(), SqrtP2(2)).verdict
    assert check_invariance_quad(DiffOp.identity(), SqrtP2(2)).verdict


def corrected_generators(space):
    r, n, lam = space.r, space.n, space.params['lambda']
    x, d, f = MatOp.x(r), MatOp.d(r), MatOp.f(r)
    p2 = MatOp.diag(DiffOp.mult(r), r)
    return [p2 * d - x.scale(n * lam), f * (x * d - n), f * d]


@pytest.mark.parametrize('n', [2, 3])
def test_sqrt_generators(n):
    space = SqrtP2(n)
    family = s_generators(space)
    assert len(family) == 4
    assert family[-1] == MatOp.identity(space.r)
    for op in family:
        assert space.check_invariance(op).verdict
    for op in corrected_generators(space):
        assert space.check_invariance(op).verdict
        assert express_on(space, op, family) is not None


def test_printed_generators_against_the_family():
    space = SqrtP2(3)
    rows = {name: (report, coeffs) for name, _, report, coeffs in printed_forms(space)}
    assert not rows['S1'][0].verdict
    assert not rows['S2'][0].verdict
    assert rows['S2'][0].witnesses
    assert rows['S3'][0].verdict and rows['S3'][1] is not None


def test_ratio_sqrt_generators():
    space = RatioSqrt(2)
    family = s_generators(space)
    for op in family:
        assert space.check_invariance(op).verdict
    report = closure_check(family[:-1], space, param_name='lambda')
    assert report.verdict


def test_sqrt_family_closes_in_the_split_form():
    space = SqrtP2(2)
    family = s_generators(space)[:3]
    report = closure_check(family, space, names=['S1', 'S2', 'S3'], param_name='lambda')
    assert report.verdict
    assert {form for _, _, form in report.signatures} == {SPLIT}
    assert report.real_form == SPLIT


def test_specialized_sqrt_space():
    space = SqrtP2(2).specialize('lambda', Fraction(1, 3))
    assert space.params['lambda'] == param(Fraction(1, 3))
    for op in corrected_generators(space):
        assert space.check_invariance(op).verdict


@pytest.mark.parametrize('n', [1, 2, 3])
def test_lame_operator(n):
    space = lame_space(n)
    op = lame_pullback(n)
    assert space.check_invariance(op).verdict
    coeffs = algebraic_spectrum(op, space)
    assert len(coeffs) - 1 == 2 * n + 1
    points = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    for point, count, squarefree in spectrum_samples(coeffs, 'k2', points):
        assert count == 2 * n + 1
        assert squarefree


def test_lame_operator_at_a_rational_modulus():
    space = lame_space(2, Fraction(1, 2))
    op = lame_pullback(2, Fraction(1, 2))
    coeffs = algebraic_spectrum(op, space)
    [(_, count, squarefree)] = spectrum_samples(coeffs, 'k2', [Fraction(1, 2)])
    assert count == 5 and squarefree


@pytest.mark.parametrize('n', [1, 2, 3])
def test_lame_space_in_the_square_of_sn(n):
    space = lame_space(n, Fraction(1, 2))
    assert space.r == SqrtP2(n, Fraction(1, 2)).r
    assert space.dim() == 2 * n + 1
    assert lame_level(n) == Fraction(4 * n + 1, 2)
    assert space.check_invariance(lame_pullback(n, Fraction(1, 2))).verdict
