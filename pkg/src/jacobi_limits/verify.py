"""Named invariant suites.

Each check walks a fixed parameter grid and returns the list of failing
cases; an empty list means the check passed.  Suites are ``identities``,
``oracles``, ``limits`` and ``conjecture``.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from . import asymptotics as asy
from .combinat import (divided_difference_coeffs, gimel, gimel_alternating,
                       inverse_binomial_transform, p_poly, signed_range_product, stirling2,
                       stirling2_alternating, t_transform)
from .oracle import (MonomialPoly, SpectralParams, brute_average, brute_selberg, density_ik,
                     power_sum, schur_poly)
from .poly import UniPoly, product
from .schur import (Partition, ScalingParams, ik_closed, ik_rf, ik_via_schur, mn_expand,
                    nk_numerator, nk_numerator_via_transform, plambda_limit, schur_average,
                    schur_average_rf, schur_limit, selberg_value)

SUITES = ("identities", "oracles", "limits", "conjecture")

# grids shared with the test-suite
TRIANGLE_AB = [(1, 1), (2, 1), (3, 2), (1, 3)]
DEGREE_SLOPES = [(0, 0), (1, 0), (0, 1), (Fraction(1, 2), Fraction(1, 3))]
SPECIAL_L = [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(3, 5), Fraction(7)]
CONJECTURE_LAMBDAS = [(1, 1), (2, 1), (2, 2), (3, 1)]
CONJECTURE_PARAMS = [(0, 0, 1, 1), (1, 0, 1, 1), (0, 1, 1, 1)]
MASTER_SLOPES = [(0, 0), (1, 0), (0, 1), (Fraction(1, 2), Fraction(1, 3)), (3, Fraction(-1, 2)),
                 (Fraction(-1, 3), 2), (-1, 0), (0, -1), (Fraction(5, 2), Fraction(7, 4))]


@dataclass
class CheckResult:
    name: str
    suite: str
    cases: int
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.passed else f"  first failure: {self.failures[0]}"
        return f"[{status}] {self.suite}/{self.name} ({self.cases} cases, {self.seconds:.2f}s){extra}"


_REGISTRY: list[tuple[str, str, Callable]] = []


def check(suite: str, name: str):
    def deco(fn):
        _REGISTRY.append((suite, name, fn))
        return fn
    return deco


class _Tally:
    def __init__(self):
        self.cases = 0
        self.failures: list[str] = []

    def expect(self, ok: bool, what: str):
        self.cases += 1
        if not ok:
            self.failures.append(what)


def _fprod(values) -> Fraction:
    return math.prod(values, start=Fraction(1))


# -- identities ----------------------------------------------------------------

@check("identities", "stirling_transform")
def _stirling(t: _Tally):
    for p in range(9):
        for k in range(p + 1):
            v = inverse_binomial_transform([Fraction(i) ** p for i in range(k + 1)], k)
            t.expect(v == factorial(k) * stirling2(p, k), f"p={p}, k={k}: {v}")
            t.expect(stirling2(p, k) == stirling2_alternating(p, k), f"S({p},{k}) recurrence")


@check("identities", "newton_coefficients")
def _diff_stirl(t: _Tally):
    rng = random.Random(20240601)
    for p in range(7):
        for _ in range(3):
            F = UniPoly([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(p)] + [1])
            newton = divided_difference_coeffs([(i, F(i)) for i in range(p + 1)])
            for k in range(p + 1):
                v = inverse_binomial_transform([F(i) for i in range(k + 1)], k)
                t.expect(v == factorial(k) * newton[k], f"deg {p}, k={k}")


@check("identities", "divided_difference_shift")
def _diff_shift(t: _Tally):
    for p in range(1, 8):
        for k in range(p):
            lhs = divided_difference_coeffs([(i, i ** p) for i in range(k + 2)])[k + 1]
            rhs = divided_difference_coeffs([(i, (i + 1) ** (p - 1)) for i in range(k + 1)])[k]
            t.expect(lhs == rhs, f"p={p}, k={k}: {lhs} != {rhs}")


@check("identities", "product_shift_lemma")
def _lemma1(t: _Tally):
    for b in (Fraction(1, 3), Fraction(-7, 2), Fraction(5)):
        for a in range(5):
            for c in range(5):
                for n in range(0, a + c + 6):
                    lhs = signed_range_product(lambda i: (b + i) / (b + c + i), a + 1, n)
                    rhs = _fprod((a + b + i) / (b + n + i) for i in range(1, c + 1))
                    t.expect(lhs == rhs, f"a={a}, b={b}, c={c}, N={n}")


@check("identities", "leading_coefficient_P")
def _lead_coeff(t: _Tally):
    x = UniPoly.x()
    for a, b in ((Fraction(2, 7), Fraction(-5, 3)), (Fraction(1), Fraction(4)), (Fraction(-3, 2), Fraction(1, 9))):
        for k in range(7):
            for p in range(k + 1):
                v = inverse_binomial_transform([p_poly(i, k, a, b) for i in range(p, k + 1)], k - p)
                want = product([x + (b - i) for i in range(p)]) * _fprod(b - a - p - i for i in range(k - p))
                t.expect(v == want, f"a={a}, b={b}, k={k}, p={p}")


@check("identities", "leading_term_T")
def _leading_t(t: _Tally):
    for a, b in ((Fraction(2, 7), Fraction(-5, 3)), (Fraction(3), Fraction(1, 2))):
        for k in range(7):
            for p in range(9):
                tr = t_transform([Fraction(i) ** p for i in range(k + 1)], k, a, b)
                if p <= k:
                    want = (-1) ** k * Fraction(factorial(k), factorial(k - p)) \
                        * _fprod(b - a - p - i for i in range(k - p))
                    t.expect(tr.coeff(p) == want and tr.degree <= p, f"a={a}, b={b}, k={k}, p={p}")
                else:
                    t.expect(tr.degree < p, f"degree, k={k}, p={p}")


def _f_seq(p, k, al1, be1, al2, be2):
    return [product([UniPoly.linear(al1, j - i + be1) * UniPoly.linear(al2, j - i + be2)
                     for j in range(p)]) for i in range(k + 1)]


def coeffbeta_formula(p: int, k: int, al1, al2, a, b) -> Fraction:
    """Closed form of the x^(2p) coefficient of T~_k^{a,b} on the product sequence."""
    total = Fraction(0)
    for j in range(k + 1):
        inner = sum((comb(p, i) * comb(p, 2 * p - j - i) * al1 ** i * al2 ** (2 * p - i - j)
                     for i in range(p + 1) if 0 <= 2 * p - j - i <= p), Fraction(0))
        total += Fraction(factorial(k), factorial(k - j)) * inner \
            * _fprod(a - b + j + i for i in range(k - j))
    return total


@check("identities", "beta_independence")
def _coeffbeta(t: _Tally):
    rng = random.Random(7)
    rnd = lambda: Fraction(rng.randint(-12, 12), rng.randint(1, 7))
    for _ in range(3):
        al1, al2, a, b = rnd(), rnd(), rnd(), rnd()
        betas = [(rnd(), rnd()), (rnd(), rnd())]
        for k in range(5):
            for p in range(k + 1):
                c = [t_transform(_f_seq(p, k, al1, b1, al2, b2), k, a, b).coeff(2 * p) for b1, b2 in betas]
                t.expect(c[0] == c[1], f"beta dependence at k={k}, p={p}")
                t.expect(c[0] == coeffbeta_formula(p, k, al1, al2, a, b), f"formula at k={k}, p={p}")


@check("identities", "alternating_binomial_sum")
def _bibident1(t: _Tally):
    for a in range(11):
        for b in range(11):
            for c in range(11):
                lhs = sum((-1) ** j * comb(a, j) * comb(c + j, b + j) for j in range(a + 1))
                t.expect(lhs == (-1) ** a * comb(c, a + b), f"a={a}, b={b}, c={c}")


@check("identities", "half_power_binomial_sum")
def _bibident2(t: _Tally):
    for n in range(11):
        for m in range(n + 1):
            lhs = sum((Fraction(-1, 2) ** j * comb(n - m + j, j) * comb(2 * n, n + m + j)
                       for j in range(n - m + 1)), Fraction(0))
            rhs = Fraction(2) ** (m - n) * comb(n, m) * Fraction(comb(2 * n, n), comb(2 * m, m))
            t.expect(lhs == rhs, f"n={n}, m={m}")


@check("identities", "transform_of_reciprocal_pairs")
def _bintranslem3(t: _Tally):
    for p in range(1, 7):
        for m in range(6):
            seq = [Fraction(1, (p + i) * (p + i + 1)) for i in range(m + 1)]
            v = inverse_binomial_transform(seq, m)
            want = Fraction((-1) ** m * factorial(m + 1), math.prod(p + i for i in range(m + 2)))
            t.expect(v == want, f"p={p}, m={m}")


@check("identities", "vandermonde_convolution")
def _eq1(t: _Tally):
    for k in range(13):
        for j in range(k):
            lhs = sum(comb(k, i + j + 1) * comb(k, i) for i in range(k - j))
            t.expect(lhs == comb(2 * k, k + j + 1), f"k={k}, j={j}")


@check("identities", "gimel_recurrence")
def _gimel(t: _Tally):
    for k in range(1, 11):
        t.expect(gimel(k, 0) == 1 and gimel(k, 1) == k, f"initial values k={k}")
        for i in range(2 * k - 1):
            r = (-(2 * k + 1 - i) * (2 * k - i) * gimel(k, i) + (2 + 2 * i - 2 * k) * gimel(k, i + 1)
                 + (i + 3) * (i + 2) * gimel(k, i + 2))
            t.expect(r == 0, f"k={k}, i={i}")
        for i in range(2 * k + 1):
            t.expect(gimel(k, i) == gimel_alternating(k, i), f"alternating sum k={k}, i={i}")


# -- oracles -----------------------------------------------------------------

@check("oracles", "oracle_triangle")
def _triangle(t: _Tally):
    for n in range(1, 5):
        for k in range(1, 5):
            for a, b in TRIANGLE_AB:
                c = ik_closed(k, a, b, n)
                br = brute_average(power_sum(k, n), n, a, b)
                d = density_ik(k, SpectralParams(a - 1, b - 1, n))
                t.expect(c == br == d, f"N={n}, k={k}, a={a}, b={b}: {c}, {br}, {d}")


@check("oracles", "density_normalisation")
def _density_norm(t: _Tally):
    for n in range(1, 6):
        for A in range(3):
            for B in range(3):
                t.expect(density_ik(0, SpectralParams(A, B, n)) == n, f"N={n}, A={A}, B={B}")


@check("oracles", "density_single_level")
def _density_slice(t: _Tally):
    for A in range(4):
        for B in range(4):
            a, b = A + 1, B + 1
            for k in range(7):
                beta = _fprod(Fraction(a + j, a + b + j) for j in range(k))
                t.expect(density_ik(k, SpectralParams(A, B, 1)) == beta, f"A={A}, B={B}, k={k}")


@check("oracles", "schur_brute_force")
def _schur_brute(t: _Tally):
    from .schur import power_sum_partitions
    for w in range(5):
        for lam in power_sum_partitions(w):
            for n in range(max(1, lam.length()), 4):
                for a, b in ((1, 1), (Fraction(3, 2), 2), (2, Fraction(1, 3))):
                    lhs = brute_average(schur_poly(lam.parts, n), n, a, b)
                    t.expect(lhs == schur_average(lam, a, b, n), f"lambda={lam}, n={n}, a={a}, b={b}")


@check("oracles", "selberg_normalisation")
def _selberg(t: _Tally):
    for n in range(1, 5):
        for a in range(1, 4):
            for b in range(1, 4):
                t.expect(brute_selberg(n, a, b) == selberg_value(n, a, b, 1), f"n={n}, a={a}, b={b}")


@check("oracles", "hook_expansion")
def _hooks(t: _Tally):
    grid = [Fraction(1), Fraction(5, 2), Fraction(1, 3), Fraction(4)]
    for k in range(1, 6):
        for n in range(1, 6):
            for a in grid:
                for b in grid:
                    t.expect(ik_closed(k, a, b, n) == ik_via_schur(k, a, b, n), f"k={k}, n={n}, a={a}, b={b}")


@check("oracles", "rational_function_evaluation")
def _rf_eval(t: _Tally):
    params = [ScalingParams(0, 1, 0, 1), ScalingParams(1, 2, 0, 1), ScalingParams(Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), 2)]
    for p in params:
        for k in range(1, 5):
            rf = ik_rf(k, p)
            for n in range(1, 13):
                a, b = p.at(n)
                t.expect(rf(n) == ik_closed(k, a, b, n) / n, f"{p}, k={k}, N={n}")


# -- limits ------------------------------------------------------------------

@check("limits", "limit_matches_rational_function")
def _master(t: _Tally):
    for a1, b1 in MASTER_SLOPES:
        p = ScalingParams(a1, Fraction(2, 3), b1, Fraction(5, 7))
        for k in range(1, 9):
            rf = ik_rf(k, p)
            t.expect(rf.num.degree <= rf.den.degree, f"finite limit, k={k}, a1={a1}, b1={b1}")
            t.expect(rf.limit_at_infinity() == asy.ik_limit(k, a1, b1), f"k={k}, a1={a1}, b1={b1}")


@check("limits", "numerator_degree")
def _degree(t: _Tally):
    for a1, b1 in DEGREE_SLOPES:
        p = ScalingParams(a1, 1, b1, 1)
        for k in range(1, 9):
            nk = nk_numerator(k, p)
            t.expect(nk.degree == 2 * k, f"k={k}, a1={a1}, b1={b1}: degree {nk.degree}")
            t.expect(nk == nk_numerator_via_transform(k, p), f"transform route k={k}, a1={a1}, b1={b1}")


@check("limits", "schur_limits")
def _schur_lim(t: _Tally):
    from .schur import power_sum_partitions
    for a1, b1 in MASTER_SLOPES[:6]:
        p = ScalingParams(a1, 1, b1, Fraction(1, 2))
        for w in range(1, 6):
            for lam in power_sum_partitions(w):
                rf = schur_average_rf(lam, p) / (UniPoly.x() ** w)
                t.expect(rf.limit_at_infinity() == schur_limit(lam, p), f"lambda={lam}, a1={a1}, b1={b1}")


@check("limits", "central_binomial")
def _central(t: _Tally):
    for k in range(1, 13):
        v = asy.ik_limit(k, 0, 0)
        t.expect(v == asy.limit_central_binomial(k) == Fraction(comb(2 * k, k), 4 ** k), f"k={k}")
        t.expect(asy.central_binomial_sum(k) == v, f"reduced sum k={k}")


@check("limits", "zero_one_branches")
def _zero_one(t: _Tally):
    for k in range(1, 9):
        for b1 in (0, 1, Fraction(1, 2)):
            t.expect(asy.ik_limit(k, -1, b1) == 0 == asy.limit_special_zero_one(k, -1, b1), f"k={k}, b1={b1}")
        for a1 in (0, 2, Fraction(1, 3)):
            t.expect(asy.ik_limit(k, a1, -1) == 1 == asy.limit_special_zero_one(k, a1, -1), f"k={k}, a1={a1}")


@check("limits", "catalan_and_dyck")
def _special(t: _Tally):
    for k in range(1, 9):
        for l in SPECIAL_L:
            t.expect(asy.limit_catalan(k, l) == asy.ik_limit(k, 0, l - 1), f"catalan k={k}, l={l}")
            t.expect(asy.limit_dyck(k, l) == asy.ik_limit(k, l - 1, 0), f"dyck k={k}, l={l}")
            t.expect(asy.limit_dyck(k, l) == asy.limit_novaes(k, l), f"novaes k={k}, l={l}")


@check("limits", "alternative_forms")
def _forms(t: _Tally):
    for a1, b1 in MASTER_SLOPES:
        l1, l2 = asy.l1l2_from_slopes(a1, b1)
        for k in range(1, 9):
            ref = asy.ik_limit(k, a1, b1)
            t.expect(asy.ik_limit_expanded(k, a1, b1) == ref, f"expanded k={k}, a1={a1}, b1={b1}")
            t.expect(asy.ik_limit_l1l2(k, l1, l2) == ref, f"l1l2 k={k}, a1={a1}, b1={b1}")


def convergence_errors(k: int, params: ScalingParams = ScalingParams(0, 1, 0, 1),
                       ns=(100, 200, 400)) -> list[Fraction]:
    """Exact |I_k(N)/N - limit| at the given N."""
    lim = asy.ik_limit(k, params.a1, params.b1)
    return [abs(ik_closed(k, *params.at(n), n) / n - lim) for n in ns]


@check("limits", "convergence_rate")
def _rate(t: _Tally):
    # symmetric offsets a0 = b0 = 1 cancel the 1/N term: doubling N divides the error by 4;
    # unequal offsets leave a 1/N term and the ratio is 2
    cases = [(ScalingParams(0, 1, 0, 1), (Fraction(18, 5), Fraction(22, 5))),
             (ScalingParams(0, 2, 0, 1), (Fraction(8, 5), Fraction(12, 5))),
             (ScalingParams(1, 1, 0, 3), (Fraction(8, 5), Fraction(12, 5)))]
    for params, (lo, hi) in cases:
        for k in (2, 3):
            e = convergence_errors(k, params)
            for r in (e[0] / e[1], e[1] / e[2]):
                t.expect(lo <= r <= hi, f"k={k}, {params}: ratio {float(r):.4f} not in [{lo}, {hi}]")


# -- conjecture --------------------------------------------------------------

@check("conjecture", "hook_signs")
def _ptos(t: _Tally):
    for k in range(1, 9):
        want = [(Partition.hook(k, i), (-1) ** i) for i in range(k)]
        t.expect(mn_expand((k,)) == want, f"k={k}")


def conjecture_table() -> list[dict]:
    """One row per (lambda, scaling) with both sides of the factorisation."""
    rows = []
    for lam in CONJECTURE_LAMBDAS:
        for a1, b1, a0, b0 in CONJECTURE_PARAMS:
            p = ScalingParams(a1, a0, b1, b0)
            lhs = plambda_limit(lam, p)
            rhs = _fprod(asy.ik_limit(part, a1, b1) for part in lam)
            rows.append({"lambda": lam, "a1": a1, "b1": b1, "a0": a0, "b0": b0,
                         "joint": lhs, "product": rhs, "equal": lhs == rhs})
    return rows


@check("conjecture", "factorisation")
def _conj(t: _Tally):
    for row in conjecture_table():
        t.expect(row["equal"], f"lambda={row['lambda']}, a1={row['a1']}, b1={row['b1']}: "
                               f"{row['joint']} != {row['product']}")


# -- runner ------------------------------------------------------------------

def checks(suite: str = "all") -> list[tuple[str, str, Callable]]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [c for c in _REGISTRY if suite == "all" or c[0] == suite]


def run_check(suite: str, name: str, fn: Callable) -> CheckResult:
    tally = _Tally()
    start = time.perf_counter()
    try:
        fn(tally)
    except Exception as exc:  # a crash is a failure of the invariant, not of the runner
        tally.failures.append(f"raised {type(exc).__name__}: {exc}")
    return CheckResult(name, suite, tally.cases, tally.failures, time.perf_counter() - start)


def run_suite(suite: str = "all") -> list[CheckResult]:
    return [run_check(s, n, fn) for s, n, fn in checks(suite)]


def get_check(name: str) -> tuple[str, str, Callable]:
    for entry in _REGISTRY:
        if entry[1] == name:
            return entry
    raise KeyError(name)
