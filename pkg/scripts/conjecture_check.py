"""Compare lim <p_lambda>/N^len(lambda) with the product of single-part limits.

Runs over every partition up to a given weight and a small grid of scalings
and prints one row per case, mismatches included.
"""
import argparse
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from jacobi_limits.asymptotics import ik_limit
from jacobi_limits.schur import ScalingParams, plambda_limit, power_sum_partitions


@dataclass
class Config:
    max_weight: int = 5
    slopes: list[tuple[Fraction, Fraction]] = field(
        default_factory=lambda: [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)),
                                 (Fraction(0), Fraction(1)), (Fraction(1, 2), Fraction(2))])
    offsets: tuple[Fraction, Fraction] = (Fraction(1), Fraction(1))


def run(cfg: Config) -> int:
    mismatches = 0
    for w, (a1, b1) in itertools.product(range(2, cfg.max_weight + 1), cfg.slopes):
        params = ScalingParams(a1, cfg.offsets[0], b1, cfg.offsets[1])
        for lam in power_sum_partitions(w):
            if lam.length() < 2:
                continue
            joint = plambda_limit(lam, params)
            prod = Fraction(1)
            for part in lam:
                prod *= ik_limit(part, a1, b1)
            mismatches += joint != prod
            flag = "ok" if joint == prod else "MISMATCH"
            print(f"{str(lam):>12} a1={str(a1):>4} b1={str(b1):>4}  {str(joint):>18}  {str(prod):>18}  {flag}")
    print(f"{mismatches} mismatches")
    return mismatches


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-weight", type=int, default=5)
    args = p.parse_args()
    raise SystemExit(1 if run(Config(max_weight=args.max_weight)) else 0)


if __name__ == "__main__":
    main()
