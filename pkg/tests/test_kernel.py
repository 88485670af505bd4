from fractions import Fraction

import pytest
from hypothesis import given, settings
from sympy import QQ
from sympy.polys.fields import field

from base import SingularSpecialization
from kernel import (A, LAMBDA, NEG_INF, PDOM, QuasiExponent, RatFunc, arith, charpoly, count_real_roots, degree,
                    format_scalar, is_param, is_squarefree, linear_in_a, normalize, nullspace, param, rref, solve,
                    specialize, to_fraction)
from .strategies import nonzero_rationals, polynomials, ratfuncs, scalars


def x_poly(*coeffs):
    return RatFunc.from_coeffs(coeffs)


def test_normalize_examples():
    assert normalize(Fraction(2, 4)) == Fraction(1, 2)
    assert normalize((A ** 2 - 1) / (A - 1)) == A + 1
    assert normalize(x_poly(-2, 0, 2) / x_poly(-2, 2)) == x_poly(1, 1)


def test_ratfunc_denominator_is_monic():
    value = x_poly(1) / x_poly(3, 6)
    assert value.den[0] == PDOM.one
    assert value == x_poly(Fraction(1, 3)) / x_poly(1, 2)


def test_arith_examples():
    assert arith('add', Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)
    assert arith('mul', A + 1, A - 1) == A ** 2 - 1
    assert arith('div', x_poly(-1, 0, 1), x_poly(-1, 1)) == x_poly(1, 1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError, match='division by zero'):
        arith('div', Fraction(1), Fraction(0))
    with pytest.raises(ZeroDivisionError, match='division by zero'):
        x_poly(1, 1) / RatFunc.zero()
    with pytest.raises(ZeroDivisionError, match='division by zero'):
        RatFunc((1,), ())


def test_zero_degree_sentinel():
    assert degree(()) is NEG_INF
    assert RatFunc.zero().num_degree() is NEG_INF
    assert NEG_INF < -1000
    assert NEG_INF + 3 is NEG_INF
    assert x_poly(0, 0, 5).num_degree() == 2


def test_specialize_examples():
    assert specialize(2 * A + 1 + 1, 2) == Fraction(6)
    with pytest.raises(SingularSpecialization) as info:
        specialize(1 / (A - 1), 1)
    assert info.value.name == 'a'
    assert specialize((A ** 2 - 4) / (A - 2), 2) == Fraction(4)


def test_specialize_ratfunc_keeps_other_parameters():
    value = x_poly(1, -(1 + LAMBDA), LAMBDA) * RatFunc.constant(A)
    special = specialize(value, Fraction(1, 2))
    assert special == x_poly(Fraction(1, 2), -(1 + LAMBDA) / 2, LAMBDA / 2)
    assert specialize(value, 3, name='lambda') == x_poly(A, -4 * A, 3 * A)


@settings(max_examples=60)
@given(ratfuncs(with_a=True))
def test_normalize_is_idempotent(value):
    once = normalize(value)
    assert normalize(once) == once
    assert once.num == value.num and once.den == value.den


@settings(max_examples=60)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_laws(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == RatFunc.zero()
    if f:
        assert f * (RatFunc.one() / f) == RatFunc.one()


@settings(max_examples=40)
@given(scalars(), scalars(), nonzero_rationals)
def test_specialize_commutes_with_arithmetic(u, v, point):
    lhs = specialize(u * v + u, point)
    rhs = specialize(u, point) * specialize(v, point) + specialize(u, point)
    assert lhs == rhs


@settings(max_examples=40)
@given(polynomials(with_a=True), polynomials(with_a=True))
def test_derivative_is_a_derivation(f, g):
    assert (f * g).diff() == f.diff() * g + f * g.diff()


def test_linear_in_a():
    assert linear_in_a(2 * A + param(Fraction(1, 2))) == (Fraction(2), Fraction(1, 2))
    assert linear_in_a(param(3)) == (Fraction(0), Fraction(3))
    assert linear_in_a(A ** 2) is None
    assert linear_in_a(1 / A) is None
    assert linear_in_a(LAMBDA) is None


def test_quasi_exponent_order_and_printing():
    exps = [QuasiExponent(2, 1), QuasiExponent(5), QuasiExponent(0, 1), QuasiExponent(-1)]
    assert sorted(exps) == [QuasiExponent(-1), QuasiExponent(5), QuasiExponent(0, 1), QuasiExponent(2, 1)]
    assert str(QuasiExponent(0, 1)) == 'a'
    assert str(QuasiExponent(-1, 1)) == 'a-1'
    assert str(QuasiExponent(3)) == '3'
    assert QuasiExponent.from_scalar(A + 2) == QuasiExponent(2, 1)
    assert QuasiExponent(1, 1).specialize(Fraction(1, 2)) == QuasiExponent(Fraction(3, 2))


def test_format_scalar_has_no_floats():
    text = format_scalar((2 * A - 1) / 3)
    assert '.' not in text
    assert format_scalar(param(0)) == '0'


def test_rref_and_nullspace():
    rows = [[1, 2, 3], [2, 4, 6 + A]]
    _, pivots = rref(rows, 3)
    assert pivots == (0, 2)
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    vec = basis[0]
    for row in rows:
        assert sum((param(c) * v for c, v in zip(row, vec)), PDOM.zero) == 0
    assert vec[1] == 1


def test_solve_consistent_and_inconsistent():
    assert solve([[1, 1], [1, -1]], [param(3), param(1)]) == [2, 1]
    assert solve([[1, 1], [2, 2]], [param(1), param(3)]) is None


def test_charpoly_trace_coefficient():
    matrix = [[1, 2], [3, 4]]
    coeffs = charpoly(matrix)
    assert coeffs == [1, -5, -2]


def test_sturm_counts():
    # (x - 1)(x - 2)(x + 3)
    coeffs = [1, 0, -7, 6]
    assert count_real_roots(coeffs) == 3
    assert count_real_roots(coeffs, lo=0, hi=5) == 2
    assert count_real_roots([1, 0, 1]) == 0
    assert is_squarefree(coeffs)
    assert not is_squarefree([1, -2, 1])


def test_to_fraction_rejects_parameters():
    assert to_fraction(param(Fraction(7, 3))) == Fraction(7, 3)
    with pytest.raises(AssertionError):
        to_fraction(A)


def test_parameter_scalars_are_recognized():
    other, t = field('t', QQ)
    assert is_param(A) and is_param(param(Fraction(1, 3)))
    assert is_param(normalize((A ** 2 - 1) / (A - 1)))
    assert not is_param(Fraction(1, 3))
    assert not is_param(t)
    assert param(A) is A
