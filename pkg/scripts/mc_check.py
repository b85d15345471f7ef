"""Metropolis estimates of <p_k>/N against the exact values, over several seeds."""
import argparse
from dataclasses import dataclass, field

from jacobi_limits.oracle import ChainConfig, batch_means, run_chain
from jacobi_limits.schur import ik_closed


@dataclass
class Config:
    n: int = 10
    a: int = 1
    b: int = 1
    k_values: tuple[int, ...] = (1, 2, 3)
    seeds: list[int] = field(default_factory=lambda: [42, 43, 44])
    samples: int = 100_000


def run(cfg: Config):
    for seed in cfg.seeds:
        chain = ChainConfig(seed=seed, samples=cfg.samples)
        res = run_chain(cfg.n, float(cfg.a), float(cfg.b), chain)
        for k in cfg.k_values:
            mean, se = batch_means((res.states ** k).sum(axis=1) / cfg.n, chain.batches)
            exact = float(ik_closed(k, cfg.a, cfg.b, cfg.n) / cfg.n)
            print(f"seed={seed} k={k}  estimate={mean:.6f} +- {se:.6f}  exact={exact:.6f}  "
                  f"z={(mean - exact) / se:+.2f}  acceptance={res.acceptance_rate:.3f}")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seeds", type=int, nargs="+", default=[42, 43, 44])
    args = p.parse_args()
    run(Config(n=args.n, a=args.a, b=args.b, seeds=args.seeds, samples=args.samples))


if __name__ == "__main__":
    main()
