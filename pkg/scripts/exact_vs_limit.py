#!/usr/bin/env python3
"""KS distance between the exact law of normalized core size and the U² limit.

Uses full enumeration, so it is exact up to the limit CDF's float error.

    python scripts/exact_vs_limit.py --max-sum 22
"""
import argparse
from math import gcd

import numpy as np

from stcores.enumeration import exact_size_distribution
from stcores.sampling import normalizer
from stcores.watson import u2_cdf


def exact_ks(s, t):
    d = exact_size_distribution(s, t)
    keys = sorted(d.counts)
    cum = np.cumsum([d.counts[k] for k in keys]) / d.total
    below = np.concatenate(([0.0], cum[:-1]))
    f = np.array([u2_cdf(k / normalizer(s, t)) for k in keys])
    return max(np.max(np.abs(cum - f)), np.max(np.abs(below - f))), d.total


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-sum", type=int, default=20)
    args = ap.parse_args()
    print("s,t,cores,ks")
    for total in range(5, args.max_sum + 1):
        for s in range(2, total // 2 + 1):
            t = total - s
            if gcd(s, t) == 1 and t - s <= 1:
                ks, n = exact_ks(s, t)
                print(f"{s},{t},{n},{ks:.4f}")


if __name__ == "__main__":
    main()
