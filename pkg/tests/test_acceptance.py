"""Acceptance criteria, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible even under
pytest's output capture) and then asserts.  Run this file directly for the
nine lines without pytest.
"""
import itertools
import math
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from jacobi_limits.asymptotics import (ik_limit, limit_catalan, limit_central_binomial,
                                       limit_dyck, limit_novaes)
from jacobi_limits.oracle import (ChainConfig, SpectralParams, batch_means, brute_average,
                                  density_ik, power_sum, run_chain)
from jacobi_limits.schur import ScalingParams, ik_closed, nk_numerator
from jacobi_limits.verify import conjecture_table, convergence_errors, run_suite

SPECIAL_L = [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(3, 5), Fraction(7)]


def criterion_1():
    t0, bad = time.perf_counter(), []
    for n, k, (a, b) in itertools.product(range(1, 5), range(1, 5), [(1, 1), (2, 1), (3, 2), (1, 3)]):
        closed = ik_closed(k, a, b, n)
        brute = brute_average(power_sum(k, n), n, a, b)
        dens = density_ik(k, SpectralParams.from_ab(a, b, n))
        if not closed == brute == dens:
            bad.append((n, k, a, b, closed, brute, dens))
    dt = time.perf_counter() - t0
    return not bad and dt < 60, f"64 cells, {len(bad)} mismatches, {dt:.1f}s"


def criterion_2():
    bad = [k for k in range(1, 13)
           if ik_limit(k, 0, 0) != Fraction(math.comb(2 * k, k), 4 ** k)
           or limit_central_binomial(k) != ik_limit(k, 0, 0)]
    spots = [ik_limit(k, 0, 0) for k in (1, 2, 3)] == [Fraction(1, 2), Fraction(3, 8), Fraction(5, 16)]
    return not bad and spots, f"k=1..12, mismatches at {bad}, spot values ok={spots}"


def criterion_3():
    bad = []
    for k in range(1, 9):
        bad += [("a1=-1", k, b1) for b1 in (0, 1, Fraction(1, 2)) if ik_limit(k, -1, b1) != 0]
        bad += [("b1=-1", k, a1) for a1 in (0, 2, Fraction(1, 3)) if ik_limit(k, a1, -1) != 1]
    return not bad, f"48 cases, mismatches {bad}"


def criterion_4():
    bad = []
    for k, l in itertools.product(range(1, 9), SPECIAL_L):
        if limit_catalan(k, l) != ik_limit(k, 0, l - 1):
            bad.append(("catalan", k, l))
        if limit_dyck(k, l) != ik_limit(k, l - 1, 0):
            bad.append(("dyck", k, l))
        if limit_dyck(k, l) != limit_novaes(k, l):
            bad.append(("novaes", k, l))
    return not bad, f"120 comparisons, mismatches {bad}"


def criterion_5():
    slopes = [(0, 0), (1, 0), (0, 1), (Fraction(1, 2), Fraction(1, 3))]
    bad = [(k, a1, b1, d) for k, (a1, b1) in itertools.product(range(1, 9), slopes)
           if (d := nk_numerator(k, ScalingParams(a1, 1, b1, 1)).degree) != 2 * k]
    return not bad, f"32 cases, wrong degrees {bad}"


def criterion_6():
    t0 = time.perf_counter()
    results = run_suite("identities")
    dt = time.perf_counter() - t0
    failed = [r.name for r in results if not r.passed]
    cases = sum(r.cases for r in results)
    return not failed and dt < 120, f"{len(results)} identities, {cases} cases, failed {failed}, {dt:.1f}s"


def criterion_7():
    lo, hi = 1.6, 2.4
    details, ok = [], True
    for k in (2, 3):
        e100, e200, e400 = convergence_errors(k, ScalingParams(0, 1, 0, 1), (100, 200, 400))
        r1, r2 = float(e100 / e200), float(e200 / e400)
        ok &= lo <= r1 <= hi and lo <= r2 <= hi
        details.append(f"k={k}: e100/e200={r1:.5f}, e200/e400={r2:.5f}")
    return ok, "; ".join(details) + f" (required [{lo}, {hi}])"


MC_CFG = ChainConfig(seed=42, samples=100_000)


def _mc_estimates():
    res = run_chain(10, 1.0, 1.0, MC_CFG)
    return [batch_means((res.states ** k).sum(axis=1) / 10, MC_CFG.batches) for k in (1, 2)], res


def criterion_9():
    t0 = time.perf_counter()
    first, res1 = _mc_estimates()
    second, res2 = _mc_estimates()
    same = first == second and res1.states.tobytes() == res2.states.tobytes()
    details, ok = [], same
    for k, (mean, se) in zip((1, 2), first):
        exact = float(ik_closed(k, 1, 1, 10) / 10)
        z = (mean - exact) / se
        ok &= abs(z) <= 4
        details.append(f"p{k}/N={mean:.6f} exact={exact:.6f} z={z:+.2f}")
    dt = time.perf_counter() - t0
    ok &= dt < 120
    return ok, "; ".join(details) + f"; reproducible={same}; {dt:.1f}s"


def criterion_8():
    rows = conjecture_table()
    bad = [(r["lambda"], r["a1"], r["b1"], str(r["joint"]), str(r["product"]))
           for r in rows if not r["equal"]]
    anchor = next(r["joint"] for r in rows if r["lambda"] == (1, 1) and r["a1"] == 0 and r["b1"] == 0)
    return not bad and anchor == Fraction(1, 4), f"{len(rows)} cases, mismatches {bad}, anchor={anchor}"


CRITERIA = {
    1: ("oracle triangle", criterion_1),
    2: ("central binomial", criterion_2),
    3: ("zero/one branches", criterion_3),
    4: ("special-case equivalence", criterion_4),
    5: ("numerator degree", criterion_5),
    6: ("identity suites", criterion_6),
    7: ("convergence rate", criterion_7),
    8: ("conjecture tester", criterion_8),
    9: ("Monte Carlo", criterion_9),
}


def evaluate(n):
    name, fn = CRITERIA[n]
    passed, detail = fn()
    return passed, f"[{'PASS' if passed else 'FAIL'}] criterion {n} ({name}): {detail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    passed, line = evaluate(n)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
