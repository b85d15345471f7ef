import itertools
from fractions import Fraction

import numpy as np
import pytest

from jacobi_limits.errors import DomainError
from jacobi_limits.oracle import (AcceptanceRateWarning, ChainConfig, MonomialPoly,
                                  SpectralParams, batch_means, brute_average, brute_selberg,
                                  density_ik, mc_sample_pk, power_sum, run_chain, schur_poly,
                                  vandermonde, vandermonde_sq)
from jacobi_limits.schur import ik_closed, selberg_value


def test_vandermonde_term_counts():
    assert len(vandermonde(3)) == 6
    assert vandermonde_sq(3).is_symmetric()
    assert not vandermonde(3).is_symmetric()


def test_brute_average_examples():
    assert brute_average(power_sum(1, 2), 2, 1, 1) == 1
    assert brute_average(MonomialPoly.one(3), 3, Fraction(2, 3), 5) == 1
    assert brute_average(power_sum(2, 1), 1, 1, 1) == Fraction(1, 3)


def test_brute_average_domain():
    with pytest.raises(DomainError):
        brute_average(MonomialPoly.one(6), 6, 1, 1)
    with pytest.raises(DomainError):
        brute_average(MonomialPoly.one(2), 2, 0, 1)
    with pytest.raises(ValueError):
        brute_average(MonomialPoly(2, {(1, 0): 1}), 2, 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_brute_selberg(n):
    for a, b in itertools.product([1, 2, 3], repeat=2):
        assert brute_selberg(n, a, b) == selberg_value(n, a, b)


def test_schur_poly_small():
    # s_(1,1)(x, y) = xy ; s_(2)(x, y) = x^2 + xy + y^2
    assert schur_poly((1, 1), 2) == MonomialPoly(2, {(1, 1): 1})
    assert schur_poly((2,), 2) == MonomialPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert len(schur_poly((1, 1, 1), 2)) == 0


def test_density_examples():
    assert density_ik(1, SpectralParams(0, 0, 1)) == Fraction(1, 2)
    assert density_ik(1, SpectralParams(0, 0, 2)) == 1
    assert density_ik(0, SpectralParams(2, 3, 4)) == 4


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_oracle_triangle(n):
    for k, (a, b) in itertools.product(range(1, 5), [(1, 1), (2, 1), (3, 2), (1, 3)]):
        closed = ik_closed(k, a, b, n)
        assert brute_average(power_sum(k, n), n, a, b) == closed
        assert density_ik(k, SpectralParams.from_ab(a, b, n)) == closed


def test_density_single_level_is_beta_moment():
    for A, B, k in itertools.product(range(4), range(4), range(7)):
        moment = Fraction(1)
        for j in range(k):
            moment *= Fraction(A + 1 + j, A + B + 2 + j)
        assert density_ik(k, SpectralParams(A, B, 1)) == moment


def test_density_domain():
    with pytest.raises(DomainError):
        SpectralParams.from_ab(Fraction(1, 2), 1, 2)
    with pytest.raises(DomainError):
        SpectralParams(-1, 0, 2)


def test_chain_config_validation():
    with pytest.raises(DomainError):
        ChainConfig(step_width=1.5)
    with pytest.raises(DomainError):
        ChainConfig(samples=10, batches=50)
    with pytest.raises(DomainError):
        ChainConfig(seed=-1)


SHORT = ChainConfig(seed=7, burn_in=500, samples=20_000, batches=20)


def test_chain_is_deterministic():
    r1 = run_chain(3, 1.0, 2.0, SHORT)
    r2 = run_chain(3, 1.0, 2.0, SHORT)
    assert r1.states.tobytes() == r2.states.tobytes()
    assert r1.acceptance_rate == r2.acceptance_rate
    assert np.all((r1.states > 0) & (r1.states < 1))


def test_different_seeds_differ():
    r1 = run_chain(2, 1.0, 1.0, SHORT)
    r2 = run_chain(2, 1.0, 1.0, ChainConfig(seed=8, burn_in=500, samples=20_000, batches=20))
    assert r1.states.tobytes() != r2.states.tobytes()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_short_chain_statistics(k):
    a, b = 2, 3
    mean, se = mc_sample_pk(k, 3, a, b, SHORT)
    assert abs(mean - float(ik_closed(k, a, b, 3))) < 5 * se


def test_acceptance_rate_warnings():
    tiny = dict(burn_in=10, samples=500, batches=10)
    with pytest.warns(AcceptanceRateWarning):
        run_chain(2, 400.0, 400.0, ChainConfig(step_width=0.9, **tiny))  # sharply peaked target
    with pytest.warns(AcceptanceRateWarning):
        run_chain(1, 1.0, 1.0, ChainConfig(step_width=0.01, **tiny))  # flat target, every move accepted


def test_mc_domain():
    with pytest.raises(DomainError):
        mc_sample_pk(1, 2, 0.0, 1.0, SHORT)
    with pytest.raises(DomainError):
        mc_sample_pk(0, 2, 1.0, 1.0, SHORT)


def test_batch_means_of_constant():
    mean, se = batch_means(np.full(100, 2.5), 10)
    assert mean == 2.5 and se == 0.0
