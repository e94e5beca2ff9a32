#!/usr/bin/env python3
"""Tabulate the walk-graph spectrum for a range of moduli.

For each d the row reports the pair count N_d, the degree of the
minimal polynomial, the dominating non-2 root modulus rho_d, the decay
exponent tau_d, and the multiplicity bump sigma_d.  Moduli whose pair
systems coincide (same I(d)) are easy to spot this way.
"""
import argparse
from dataclasses import dataclass

from sternseq import index_I, pair_counts, spectral


@dataclass(frozen=True)
class Config:
    d_min: int = 2
    d_max: int = 12
    digits: int = 40


def parse_args(argv=None) -> Config:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-min", type=int, default=Config.d_min)
    ap.add_argument("--d-max", type=int, default=Config.d_max)
    ap.add_argument("--digits", type=int, default=Config.digits,
                    help="working precision for root refinement")
    ns = ap.parse_args(argv)
    return Config(ns.d_min, ns.d_max, ns.digits)


def main(cfg: Config) -> None:
    print("d\tN_d\tI_d\tdeg\trho\ttau\tsigma")
    for d in range(cfg.d_min, cfg.d_max + 1):
        rep = spectral(d, digits=cfg.digits)
        print(f"{d}\t{pair_counts(d)[0]}\t{index_I(d)}\t"
              f"{len(rep.minimal_poly) - 1}\t{rep.rho:.12f}\t"
              f"{rep.tau:.12f}\t{rep.sigma}")


if __name__ == "__main__":
    main(parse_args())
