#!/usr/bin/env python3
"""Compare exact prefix sums of t(n) with the compensated float path.

For each N = 2^k the row shows the exact value (as a float), the float
sum, the true error, the a-priori error bound, and the proven bracket
width.  The true error should sit far below the bound.
"""
import argparse
from dataclasses import dataclass

from sternseq import t_prefix_sum


@dataclass(frozen=True)
class Config:
    k_min: int = 4
    k_max: int = 18
    threads: int = 1


def parse_args(argv=None) -> Config:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-min", type=int, default=Config.k_min)
    ap.add_argument("--k-max", type=int, default=Config.k_max)
    ap.add_argument("--threads", type=int, default=Config.threads)
    ns = ap.parse_args(argv)
    return Config(ns.k_min, ns.k_max, ns.threads)


def main(cfg: Config) -> None:
    print("log2_N\texact\tfloat\ttrue_err\terr_bound\tbracket_width")
    for k in range(cfg.k_min, cfg.k_max + 1):
        rep = t_prefix_sum(1 << k, threads=cfg.threads)
        err = abs(rep.float_sum - float(rep.exact_sum))
        width = float(rep.upper - rep.lower)
        print(f"{k}\t{float(rep.exact_sum):.6f}\t{rep.float_sum:.6f}\t"
              f"{err:.3e}\t{rep.float_error_bound:.3e}\t{width:.3f}")


if __name__ == "__main__":
    main(parse_args())
