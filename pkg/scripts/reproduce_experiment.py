#!/usr/bin/env python3
"""Reference experiment: p = k, r = (1 + i + j + k)/2, epsilon = 1e-5, delta = 0.01.

Writes into --outdir:
    kli.csv         KLI trajectory with Hopf columns
    slerp.csv       SLERP trajectory (same sample count) with Hopf columns
    frames.csv      unit-cube corners rotated at the tabulated moments
    compare.json    KLI-vs-SLERP path comparison

and prints the quaternion at each tabulated moment next to the exact solution.

Usage:
    python scripts/reproduce_experiment.py [--outdir results] [--epsilon 1e-5]
"""

import argparse
import json
from pathlib import Path

from kli import (
    KLIConfig,
    UnitQuaternion,
    closed_form_solution,
    generate_frames,
    kli_interpolate,
    path_deviation,
    slerp_sample,
)
from kli.cli import format_frames, write_curve

MOMENTS = [0.0, 0.2, 0.4, 0.55, 0.85, 1.2, 1.8, 11.66]


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--outdir", type=Path, default=Path("results"))
    parser.add_argument("--epsilon", type=float, default=1e-5)
    parser.add_argument("--delta", type=float, default=0.01)
    args = parser.parse_args()

    p = UnitQuaternion(0, 0, 0, 1)
    r = UnitQuaternion(0.5, 0.5, 0.5, 0.5)
    cfg = KLIConfig(args.epsilon, args.delta, args.delta)
    curve = kli_interpolate(p, r, cfg)
    slerp = slerp_sample(p, r, len(curve))

    args.outdir.mkdir(parents=True, exist_ok=True)
    write_curve(curve, args.outdir / "kli.csv", "csv", hopf=True)
    write_curve(slerp, args.outdir / "slerp.csv", "csv", hopf=True, method="slerp")
    moments = [t for t in MOMENTS if t <= curve.converged_time]
    frames = generate_frames(p, r, moments, cfg=cfg, curve=curve)
    (args.outdir / "frames.csv").write_text(format_frames(frames, "csv"))
    cmp = path_deviation(curve, p, r)
    (args.outdir / "compare.json").write_text(json.dumps(cmp.as_dict(), indent=1) + "\n")

    print(f"converged at T = {curve.converged_time:.2f}  ({len(curve)} samples)")
    print(f"max deviation from SLERP arc: {cmp.max_deviation:.3e} rad")
    print(f"endpoint error ||r - q(T)||:  {cmp.endpoint_error:.3e}")
    print()
    print(f"{'t':>6}  {'KLI q(t)':>34}  {'exact':>34}")
    for t in moments:
        q = curve.sample_at(t)
        e = closed_form_solution(p, r, t)
        fmt = lambda v: " ".join(f"{c:7.4f}" for c in v)
        print(f"{t:6.2f}  {fmt(q):>34}  {fmt(e):>34}")


if __name__ == "__main__":
    main()
