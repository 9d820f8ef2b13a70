#!/usr/bin/env python3
"""Deviation of KLI from SLERP and convergence time over random rotation pairs.

Prints summary statistics and optionally writes one CSV row per pair.

Usage:
    python scripts/random_pairs_study.py [--n 200] [--seed 0] [--csv study.csv]
"""

import argparse
import csv
import math

import numpy as np

from kli import KLIConfig, UnitQuaternion, dot, kli_interpolate, path_deviation


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--epsilon", type=float, default=1e-5)
    parser.add_argument("--shortest", action="store_true")
    parser.add_argument("--csv")
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    cfg = KLIConfig(epsilon=args.epsilon, shortest_path=args.shortest)
    rows = []
    for _ in range(args.n):
        v = rng.normal(size=(2, 4))
        v /= np.linalg.norm(v, axis=1, keepdims=True)
        p, r = UnitQuaternion(*v[0]), UnitQuaternion(*v[1])
        if dot(p, r) <= -1 + 1e-6:
            continue
        curve = kli_interpolate(p, r, cfg)
        cmp = path_deviation(curve, p, curve.target)
        angle = math.acos(max(-1.0, min(1.0, dot(p, curve.target))))
        rows.append((angle, cmp.converged_time, cmp.max_deviation, cmp.endpoint_error))

    arr = np.array(rows)
    print(f"pairs: {len(arr)}")
    print(f"max deviation:   {arr[:, 2].max():.3e} rad")
    print(f"endpoint error:  max {arr[:, 3].max():.3e}")
    print(f"converged time:  min {arr[:, 1].min():.2f}  median {np.median(arr[:, 1]):.2f}  max {arr[:, 1].max():.2f}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["angle", "converged_time", "max_deviation", "endpoint_error"])
            w.writerows(rows)


if __name__ == "__main__":
    main()
