"""Exact finite-N errors |I_k/N - limit| and the observed decay ratios.

Prints, for each k, the errors at N, 2N, 4N, ... and the ratio between
consecutive doublings.  A ratio near 2 means O(1/N), near 4 means O(1/N^2).
"""
import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from jacobi_limits.asymptotics import ik_limit
from jacobi_limits.schur import ScalingParams, ik_rf


@dataclass
class Config:
    k_values: list[int] = field(default_factory=lambda: [1, 2, 3, 4])
    offsets: list[tuple[Fraction, Fraction]] = field(
        default_factory=lambda: [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(1)),
                                 (Fraction(1), Fraction(3))])
    a1: Fraction = Fraction(0)
    b1: Fraction = Fraction(0)
    n_start: int = 100
    doublings: int = 4


def run(cfg: Config):
    for a0, b0 in cfg.offsets:
        params = ScalingParams(cfg.a1, a0, cfg.b1, b0)
        print(f"a = {cfg.a1}N + {a0}, b = {cfg.b1}N + {b0}")
        for k in cfg.k_values:
            rf, lim = ik_rf(k, params), ik_limit(k, cfg.a1, cfg.b1)
            ns = [cfg.n_start * 2 ** j for j in range(cfg.doublings)]
            errs = [abs(rf(n) - lim) for n in ns]
            ratios = [f"{float(e / f):.4f}" if f else "-" for e, f in zip(errs, errs[1:])]
            print(f"  k={k}  errors " + " ".join(f"{float(e):.3e}" for e in errs)
                  + "  ratios " + " ".join(ratios))


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--a1", type=Fraction, default=Fraction(0))
    p.add_argument("--b1", type=Fraction, default=Fraction(0))
    p.add_argument("--k-max", type=int, default=4)
    args = p.parse_args()
    run(Config(k_values=list(range(1, args.k_max + 1)), a1=args.a1, b1=args.b1))


if __name__ == "__main__":
    main()
