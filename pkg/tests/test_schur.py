import math
from collections import Counter
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from jacobi_limits.errors import DomainError
from jacobi_limits.oracle import brute_average, power_sum, schur_poly
from jacobi_limits.poly import RationalFunction, UniPoly
from jacobi_limits.schur import (Partition, ScalingParams, ik_closed, ik_denominator, ik_rf,
                                 ik_via_schur, mn_expand, nk_numerator,
                                 nk_numerator_via_transform, plambda_limit, power_sum_partitions,
                                 schur_average, schur_average_rf, schur_limit, selberg_value)

from conftest import fractions

SYMMETRIC = ScalingParams(0, 1, 0, 1)


def test_partition_validation():
    assert Partition.of(3, 1, 1).weight() == 5
    assert Partition.hook(4, 2) == Partition.of(2, 1, 1)
    with pytest.raises(ValueError):
        Partition.of(1, 2)
    with pytest.raises(ValueError):
        Partition.of(2, 0)


@pytest.mark.parametrize("args,expected", [((1, 1, 1, 1), 1), ((2, 1, 1, 1), Fraction(1, 6)),
                                           ((1, 2, 1, 1), Fraction(1, 2))])
def test_selberg_values(args, expected):
    assert selberg_value(*args) == expected


def test_selberg_against_sympy_double_integral():
    x, y = sympy.symbols("x y")
    for a, b in [(1, 1), (2, 3), (3, 1)]:
        integrand = (x - y) ** 2 * (x * y) ** (a - 1) * ((1 - x) * (1 - y)) ** (b - 1)
        val = sympy.integrate(integrand, (x, 0, 1), (y, 0, 1))
        assert Fraction(str(val)) == selberg_value(2, a, b)


def test_schur_average_examples():
    assert schur_average((2,), 1, 1, 1) == Fraction(1, 3)
    assert schur_average((1,), 1, 1, 2) == 1
    assert schur_average((), Fraction(5, 3), 7, 4) == 1


def test_schur_average_needs_enough_variables():
    with pytest.raises(DomainError):
        schur_average((1, 1, 1), 2, 2, 2)


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1), (2, 2), (3, 1)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_schur_average_against_brute_force(lam, n):
    if n < len(lam):
        assert brute_average(schur_poly(lam, n), n, 2, 2) == 0
        return
    for a, b in [(1, 1), (2, 3), (Fraction(1, 2), Fraction(5, 2))]:
        assert schur_average(lam, a, b, n) == brute_average(schur_poly(lam, n), n, a, b)


def test_schur_average_rf_matches_pointwise():
    params = ScalingParams(Fraction(1, 2), 2, 1, Fraction(1, 3))
    for lam in [(1,), (2, 1), (3, 1, 1)]:
        rf = schur_average_rf(lam, params)
        for n in range(len(lam), 9):
            assert rf(n) == schur_average(lam, *params.at(n), n)


def test_schur_average_rf_examples():
    assert schur_average_rf((), SYMMETRIC) == RationalFunction(1)
    assert schur_average_rf((1,), SYMMETRIC) == RationalFunction(UniPoly([0, Fraction(1, 2)]))


@pytest.mark.parametrize("lam,expected", [((1,), Fraction(1, 2)), ((2,), Fraction(1, 8)),
                                          ((1, 1), Fraction(1, 8))])
def test_schur_limit_examples(lam, expected):
    assert schur_limit(lam, SYMMETRIC) == expected


@pytest.mark.parametrize("k,n,expected", [(1, 1, Fraction(1, 2)), (2, 1, Fraction(1, 3)), (1, 2, 1)])
def test_ik_closed_examples(k, n, expected):
    assert ik_closed(k, 1, 1, n) == expected


def test_ik_closed_sympy_jacobi_weight():
    x, y = sympy.symbols("x y")
    a, b = 2, 3
    w = (x - y) ** 2 * (x * y) ** (a - 1) * ((1 - x) * (1 - y)) ** (b - 1)
    z = sympy.integrate(w, (x, 0, 1), (y, 0, 1))
    for k in range(1, 5):
        m = sympy.integrate(w * (x ** k + y ** k), (x, 0, 1), (y, 0, 1))
        assert Fraction(str(m / z)) == ik_closed(k, a, b, 2)


def test_ik_closed_names_vanishing_factor():
    with pytest.raises(DomainError, match="a\\+b\\+2N"):
        ik_closed(2, 1, -3, 2)


@given(st.integers(1, 6), st.integers(1, 5), fractions(max_num=30, max_den=4).filter(lambda v: v > 0),
       fractions(max_num=30, max_den=4).filter(lambda v: v > 0))
def test_ik_via_schur_agrees(k, n, a, b):
    assert ik_via_schur(k, a, b, n) == ik_closed(k, a, b, n)


def test_ik_via_schur_examples():
    assert ik_via_schur(2, 1, 1, 1) == Fraction(1, 3)
    assert ik_via_schur(1, 3, 2, 4) == schur_average((1,), 3, 2, 4)
    assert ik_via_schur(3, 1, 1, 2) == ik_closed(3, 1, 1, 2)


def test_ik_rf_examples():
    assert ik_rf(1, SYMMETRIC) == RationalFunction(Fraction(1, 2))
    assert ik_rf(2, SYMMETRIC)(1) == Fraction(1, 3)
    a1, a0, b1, b0 = Fraction(1, 2), 3, 2, Fraction(-1, 3)
    expected = RationalFunction(UniPoly([a0 - 1, a1 + 1]), UniPoly([a0 + b0 - 2, a1 + b1 + 2]))
    assert ik_rf(1, ScalingParams(a1, a0, b1, b0)) == expected


@pytest.mark.parametrize("k", range(1, 7))
def test_ik_rf_matches_closed_form(k):
    params = ScalingParams(1, 2, Fraction(1, 3), 1)
    rf = ik_rf(k, params)
    for n in range(1, 10):
        assert rf(n) == ik_closed(k, *params.at(n), n) / n


@pytest.mark.parametrize("k", range(1, 7))
def test_numerator_routes_agree(k):
    for params in [SYMMETRIC, ScalingParams(1, 0, 0, 2), ScalingParams(Fraction(1, 2), 1, Fraction(1, 3), 2)]:
        num = nk_numerator(k, params)
        assert num == nk_numerator_via_transform(k, params)
        assert num.degree == 2 * k
        assert ik_denominator(k, params).degree == 2 * k


def test_mn_expand_examples():
    assert mn_expand((2,)) == [(Partition.of(2), 1), (Partition.of(1, 1), -1)]
    assert mn_expand((1,)) == [(Partition.of(1), 1)]
    assert mn_expand((1, 1)) == [(Partition.of(2), 1), (Partition.of(1, 1), 1)]


def _z(lam):
    out = 1
    for part, mult in Counter(lam).items():
        out *= part ** mult * math.factorial(mult)
    return out


@pytest.mark.parametrize("weight", range(1, 8))
def test_character_orthogonality(weight):
    for lam in power_sum_partitions(weight):
        assert sum(c * c for _, c in mn_expand(lam)) == _z(lam.parts)


@pytest.mark.parametrize("lam", [(2, 1), (3, 1), (2, 2), (1, 1, 1)])
def test_mn_expand_against_monomials(lam):
    n = 3
    target = power_sum(lam[0], n)
    for part in lam[1:]:
        target = target * power_sum(part, n)
    total = None
    for mu, c in mn_expand(lam):
        term = schur_poly(mu.parts, n) * c
        total = term if total is None else total + term
    assert total == target


def test_plambda_limit_examples():
    assert plambda_limit((1, 1), SYMMETRIC) == Fraction(1, 4)
    assert plambda_limit((2, 1), SYMMETRIC) == Fraction(3, 16)


def test_plambda_single_part_is_ik_limit():
    from jacobi_limits.asymptotics import ik_limit
    for k in range(1, 6):
        assert plambda_limit((k,), ScalingParams(1, 1, 0, 1)) == ik_limit(k, 1, 0)


def test_degenerate_slope_rejected():
    with pytest.raises(DomainError):
        nk_numerator(2, ScalingParams(-1, 1, -1, 1))
