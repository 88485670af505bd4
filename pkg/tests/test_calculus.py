from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from base import NonLaurentCoefficient, PreconditionError
from calculus import DiffOp, QuasiPoly, act_poly, act_quasi, commutator, compose, conjugate_by_power, falling_factorial
from kernel import A, PDOM, QuasiExponent, RatFunc, param
from spaces import make_bosonic, make_k
from .strategies import diffops, polynomials

x, d, D = DiffOp.x(), DiffOp.d(), DiffOp.euler()


def mono(offset, a_part=0, coeff=1):
    return QuasiPoly.monomial(QuasiExponent(offset, a_part), coeff)


def test_compose_examples():
    assert compose(d, x) == x * d + DiffOp.identity()
    assert compose(D, D) == DiffOp({(0, 2): RatFunc.x_power(2), (0, 1): RatFunc.x_power(1)})
    assert compose(x * x, d) == DiffOp({(0, 1): RatFunc.x_power(2)})


def test_commutator_examples():
    assert commutator(d, x) == DiffOp.identity()
    assert commutator(D, DiffOp.x_power(3)) == DiffOp.mult(RatFunc.x_power(3, 3))


@pytest.mark.parametrize('n', range(6))
@pytest.mark.parametrize('m', range(6))
def test_bosonic_zero_is_a_grading(n, m):
    triple = make_bosonic(n, m)
    assert commutator(triple.zero, triple.plus) == triple.plus
    assert commutator(triple.zero, triple.minus) == -triple.minus


def test_conjugate_by_power_examples():
    assert conjugate_by_power(d, A) == d - DiffOp.mult(RatFunc.x_power(-1, A))
    assert conjugate_by_power(D, A) == D - A


@pytest.mark.parametrize('n', range(4))
def test_conjugated_raising_operator(n):
    kp = make_k(n).plus
    for j in range(n + 2):
        assert act_quasi(kp, mono(j, 1)) == mono(j + 1, 1, j - n)


def test_act_quasi_examples():
    assert act_quasi(d, mono(2, 1)) == mono(1, 1, A + 2)
    for n in range(3):
        for m in range(3):
            plus = make_bosonic(n, m).plus
            assert act_quasi(plus, mono(n)) == QuasiPoly()
            assert act_quasi(plus, mono(0)) == mono(1, 0, n * (m + A))


def test_shifted_terms():
    x_a = DiffOp.x_power(0, 1)
    assert compose(d, x_a) == DiffOp({(1, 1): RatFunc.one(), (1, 0): RatFunc.x_power(-1, A)})
    assert act_quasi(DiffOp.x_power(0, -1), mono(2, 1)) == mono(2)
    assert compose(DiffOp.x_power(0, -1), x_a) == DiffOp.identity()


def test_act_poly_examples():
    assert act_poly(d, [0, 0, 0, 1]) == RatFunc.x_power(2, 3)
    assert act_poly(DiffOp.mult(RatFunc.x_power(-1)) * D, [1]) == RatFunc.zero()
    shifted = d - DiffOp.mult(RatFunc.x_power(-1, A))
    assert act_poly(shifted, [0, 0, 1]) == RatFunc.x_power(1, 2) - RatFunc.x_power(1, A)


def test_act_poly_rejects_shifts():
    with pytest.raises(PreconditionError):
        act_poly(DiffOp.x_power(0, 1), [1])


def test_non_laurent_coefficient():
    op = DiffOp.mult(RatFunc.one() / RatFunc.from_coeffs([1, 1]))
    with pytest.raises(NonLaurentCoefficient):
        act_quasi(op, mono(0, 1))


def test_falling_factorial():
    assert falling_factorial(param(5), 2) == 20
    assert falling_factorial(A, 0) == PDOM.one
    assert falling_factorial(A, 2) == A * (A - 1)


def test_printing():
    assert str(DiffOp.zero()) == '0'
    assert str(d) == 'd'
    assert str(DiffOp.d(2)) == 'd^2'
    assert str(DiffOp.identity()) == '(1)'
    assert str(DiffOp.x_power(0, -1)) == 'x^(-a)'


def test_specialize_folds_shifts():
    op = DiffOp.x_power(1, -1) * d
    assert op.specialize('a', 3) == DiffOp.mult(RatFunc.x_power(-2)) * d
    with pytest.raises(PreconditionError):
        op.specialize('a', Fraction(1, 2))


@settings(max_examples=100)
@given(diffops(), diffops(), diffops())
def test_composition_is_associative(p, q, r):
    assert compose(p, compose(q, r)) == compose(compose(p, q), r)


@settings(max_examples=100)
@given(diffops(), diffops(), diffops())
def test_jacobi_identity(p, q, r):
    total = commutator(p, commutator(q, r)) + commutator(q, commutator(r, p)) + commutator(r, commutator(p, q))
    assert not total


@settings(max_examples=60)
@given(diffops(), polynomials(with_a=True))
def test_weyl_relation_on_random_functions(p, f):
    fx = DiffOp.mult(f)
    assert commutator(d, fx) == DiffOp.mult(f.diff())
    assert commutator(d, x) == DiffOp.identity()
    # re-normalizing a canonical operator changes nothing
    assert DiffOp(p.terms) == p


@settings(max_examples=60)
@given(diffops(with_a=True), diffops(with_a=True), st.integers(0, 3), st.integers(-1, 2))
def test_action_is_a_homomorphism(p, q, offset, a_part):
    v = mono(offset, a_part) + mono(offset + 2, 0, 3)
    assert act_quasi(compose(p, q), v) == act_quasi(p, act_quasi(q, v))


@settings(max_examples=60)
@given(diffops(with_a=True))
def test_conjugation_is_invertible(p):
    assert conjugate_by_power(conjugate_by_power(p, A), -A) == p
    assert conjugate_by_power(p, A) == compose(compose(DiffOp.x_power(0, 1), p), DiffOp.x_power(0, -1))
