#!/usr/bin/env python3
"""Monte Carlo convergence of normalized core sizes to the U² limit along growth paths.

    python scripts/convergence.py --n 100000 --seed 1
"""
import argparse
import time
from math import gcd

from stcores.enumeration import armstrong_mean, core_size_variance
from stcores.sampling import SampleConfig, monte_carlo_sizes, normalizer
from stcores.watson import ks_against_limit

PATHS = {
    "s,s+1": lambda s: s + 1,
    "s,2s+1": lambda s: 2 * s + 1,
    "s,s^2+1": lambda s: s * s + 1,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=20_000)
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--sizes", default="5,10,20,40,80")
    args = ap.parse_args()

    print("path,s,t,mean,exact_mean,var,exact_var,ks,seconds")
    for name, other in PATHS.items():
        for s in (int(x) for x in args.sizes.split(",")):
            t = other(s)
            if gcd(s, t) != 1:
                continue
            start = time.perf_counter()
            sizes = monte_carlo_sizes(SampleConfig(s, t, args.n, args.seed))
            x = sizes / normalizer(s, t)
            norm = normalizer(s, t)
            ks = ks_against_limit(x).ks_distance
            print(
                f"{name},{s},{t},{x.mean():.5f},{float(armstrong_mean(s, t)) / norm:.5f},"
                f"{x.var(ddof=1):.6f},{float(core_size_variance(s, t)) / norm**2:.6f},"
                f"{ks:.4f},{time.perf_counter() - start:.2f}"
            )


if __name__ == "__main__":
    main()
