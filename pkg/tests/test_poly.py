from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from jacobi_limits.errors import DomainError
from jacobi_limits.poly import RationalFunction, UniPoly, poly_gcd

from conftest import fractions

polys = st.lists(fractions(), max_size=5).map(UniPoly)
X = sympy.Symbol("x")


def to_sympy(p: UniPoly):
    return sum((sympy.Rational(c.numerator, c.denominator) * X ** i
                for i, c in enumerate(p.coeffs)), sympy.Integer(0))


def test_zero_polynomial_has_degree_minus_one():
    assert UniPoly().degree == -1
    assert UniPoly([0, 0]).is_zero()
    assert UniPoly([1, 2, 0]).degree == 1


def test_evaluation_and_composition():
    p = UniPoly([1, 0, 1])  # 1 + x^2
    assert p(3) == 10
    assert p(UniPoly.linear(1, 1)) == UniPoly([2, 2, 1])
    assert p.scale_var(2) == UniPoly([1, 0, 4])


@given(polys, polys)
def test_ring_axioms(p, q):
    assert p + q == q + p
    assert p * q == q * p
    assert (p - q) + q == p


@given(polys, polys, fractions())
def test_multiplication_is_evaluation_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)


@given(polys, polys)
def test_divmod(p, q):
    assume(not q.is_zero())
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@given(polys, polys)
def test_gcd_matches_sympy(p, q):
    assume(not (p.is_zero() and q.is_zero()))
    g = poly_gcd(p, q)
    assert g.leading() == 1
    expected = sympy.Poly(sympy.gcd(to_sympy(p), to_sympy(q)), X).monic()
    assert to_sympy(g).expand() == expected.as_expr().expand()


def test_rational_function_reduces():
    x = UniPoly.x()
    rf = RationalFunction((x - 1) * (x + 2), 3 * (x - 1) * (x + 5))
    assert rf.num == (x + 2) / 3
    assert rf.den == x + 5


@given(polys, polys, polys, polys, fractions())
def test_rational_function_arithmetic_pointwise(p, q, r, s, x):
    assume(not q.is_zero() and not s.is_zero())
    assume(q(x) != 0 and s(x) != 0)
    f, g = RationalFunction(p, q), RationalFunction(r, s)
    assert (f + g)(x) == p(x) / q(x) + r(x) / s(x)
    assert (f * g)(x) == p(x) / q(x) * (r(x) / s(x))
    assert (f - g)(x) == p(x) / q(x) - r(x) / s(x)


def test_rational_function_errors():
    with pytest.raises(DomainError):
        RationalFunction(1, 0)
    with pytest.raises(DomainError):
        RationalFunction(1, UniPoly.x())(0)
    with pytest.raises(DomainError):
        RationalFunction(UniPoly([0, 0, 1]), UniPoly.x() + 1).limit_at_infinity()


def test_limit_at_infinity():
    x = UniPoly.x()
    assert RationalFunction(3 * x + 1, 2 * x - 7).limit_at_infinity() == Fraction(3, 2)
    assert RationalFunction(5, x).limit_at_infinity() == 0
    assert RationalFunction(0, x).limit_at_infinity() == 0


def test_non_rational_coefficients_rejected():
    with pytest.raises(TypeError):
        UniPoly([0.5])
