"""``interp`` command line tool.

Quaternions are always written ``w,x,y,z`` (scalar first).

Exit codes: 0 success, 2 invalid input, 3 antipodal endpoints or no convergence.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import math
import os
import sys
from pathlib import Path
from typing import List, Sequence, Tuple

from .analysis import generate_frames, path_deviation
from .errors import AntipodalInput, KLIError, NonConvergence
from .hopf import hopf_project
from .kli_flow import InterpolationCurve, KLIConfig, kli_interpolate
from .quat_core import UnitQuaternion
from .slerp_ref import slerp_sample

log = logging.getLogger("kli.cli")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERIC = 3

CSV_HEADER = ["t", "w", "x", "y", "z"]
HOPF_HEADER = ["hx", "hy", "hz"]


class InputError(ValueError):
    pass


def _fmt(v: float) -> str:
    # +0.0 folds negative zero
    return format(v + 0.0, ".17g")


def parse_quaternion(text: str, name: str = "quaternion") -> UnitQuaternion:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 4:
        raise InputError(f"{name}: expected 4 comma-separated values w,x,y,z, got {text!r}")
    try:
        vals = [float(s) for s in parts]
    except ValueError:
        raise InputError(f"{name}: could not parse {text!r} as 4 reals") from None
    if not all(math.isfinite(v) for v in vals):
        raise InputError(f"{name}: non-finite component in {text!r}")
    try:
        return UnitQuaternion(*vals)
    except KLIError as exc:
        raise InputError(f"{name}: {exc}") from None


def read_pairs(path) -> List[Tuple[UnitQuaternion, UnitQuaternion]]:
    """Read ``pw,px,py,pz,rw,rx,ry,rz`` lines; ``#`` lines and blank lines are skipped."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = [s.strip() for s in line.split(",")]
            if len(parts) != 8:
                raise InputError(f"{path}:{lineno}: expected 8 values, got {len(parts)}")
            try:
                vals = [float(s) for s in parts]
            except ValueError:
                raise InputError(f"{path}:{lineno}: could not parse {line!r}") from None
            if not all(math.isfinite(v) for v in vals):
                raise InputError(f"{path}:{lineno}: non-finite value in {line!r}")
            try:
                p = UnitQuaternion(*vals[:4])
            except KLIError as exc:
                raise InputError(f"{path}:{lineno}: p: {exc}") from None
            try:
                r = UnitQuaternion(*vals[4:])
            except KLIError as exc:
                raise InputError(f"{path}:{lineno}: r: {exc}") from None
            pairs.append((p, r))
    return pairs


def curve_rows(curve: InterpolationCurve, hopf: bool = False) -> List[List[float]]:
    rows = []
    for t, q in curve.samples:
        row = [t, q.w, q.x, q.y, q.z]
        if hopf:
            row.extend(hopf_project(q))
        rows.append(row)
    return rows


def format_curve(
    curve: InterpolationCurve,
    fmt: str = "csv",
    hopf: bool = False,
    config: KLIConfig | None = None,
    method: str = "kli",
) -> str:
    header = CSV_HEADER + (HOPF_HEADER if hopf else [])
    rows = curve_rows(curve, hopf)
    if fmt == "csv":
        buf = io.StringIO(newline="")
        buf.write(",".join(header) + "\n")
        for row in rows:
            buf.write(",".join(_fmt(v) for v in row) + "\n")
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "method": method,
            "columns": header,
            "converged_time": curve.converged_time,
            "step": curve.step,
            "target": list(curve.target.as_tuple()),
            "config": config.as_dict() if config is not None else None,
            "samples": [dict(zip(header, row)) for row in rows],
        }
        return json.dumps(doc, indent=1) + "\n"
    raise InputError(f"unknown output format {fmt!r}")


def write_curve(curve, path, fmt="csv", hopf=False, config=None, method="kli"):
    text = format_curve(curve, fmt, hopf, config, method)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def read_curve_json(path) -> InterpolationCurve:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    samples = [
        (s["t"], UnitQuaternion(s["w"], s["x"], s["y"], s["z"])) for s in doc["samples"]
    ]
    return InterpolationCurve(samples, doc["converged_time"], UnitQuaternion(*doc["target"]), doc["step"])


def format_frames(frames, fmt: str) -> str:
    if fmt == "csv":
        lines = ["t,point,x,y,z"]
        for t, pts in frames:
            for i, v in enumerate(pts):
                lines.append(",".join([_fmt(t), str(i)] + [_fmt(c) for c in v]))
        return "\n".join(lines) + "\n"
    doc = {"frames": [{"t": t, "points": [list(v) for v in pts]} for t, pts in frames]}
    return json.dumps(doc, indent=1) + "\n"


def _parse_times(text: str) -> List[float]:
    try:
        times = [float(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"--frames: could not parse {text!r}") from None
    if not times or any(not math.isfinite(t) or t < 0 for t in times):
        raise InputError(f"--frames: need nonnegative finite times, got {text!r}")
    return times


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interp",
        description="Interpolate between two rotations (unit quaternions w,x,y,z) "
        "with the Kuramoto-Lohe flow (KLI) or SLERP.",
    )
    sub = parser.add_subparsers(dest="method", required=True)

    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("endpoints")
    src.add_argument("--p", help="initial rotation as w,x,y,z")
    src.add_argument("--r", help="final rotation as w,x,y,z")
    src.add_argument("--pairs", type=Path, help="CSV file with lines pw,px,py,pz,rw,rx,ry,rz")
    common.add_argument("--shortest", action="store_true", help="negate r when dot(p, r) < 0")
    common.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format (default: from --out suffix, else csv)")
    common.add_argument("--out", type=Path, help="output path; with --pairs, files are index-suffixed")

    flow = argparse.ArgumentParser(add_help=False)
    flow.add_argument("--epsilon", type=float, default=1e-5, help="stopping tolerance (default 1e-5)")
    flow.add_argument("--delta", type=float, default=0.01, help="horizon increment (default 0.01)")
    flow.add_argument("--step", type=float, default=None, help="RK4 step (default: delta)")
    flow.add_argument("--t-max", type=float, default=100.0, help="give up after this time (default 100)")

    kli = sub.add_parser("kli", parents=[common, flow], help="KLI trajectory")
    kli.add_argument("--hopf", action="store_true", help="append Hopf projection columns hx,hy,hz")
    kli.add_argument("--frames", help="comma-separated times; writes rotated unit-cube corners "
                     "to <out stem>_frames<suffix>")

    slerp = sub.add_parser("slerp", parents=[common], help="SLERP trajectory")
    slerp.add_argument("--samples", type=int, default=101, help="number of samples (default 101)")
    slerp.add_argument("--hopf", action="store_true", help="append Hopf projection columns hx,hy,hz")

    sub.add_parser("compare", parents=[common, flow],
                   help="run KLI and report its deviation from the SLERP arc as JSON")
    return parser


def _endpoints(args) -> List[Tuple[UnitQuaternion, UnitQuaternion]]:
    if args.pairs is not None:
        if args.p is not None or args.r is not None:
            raise InputError("use either --pairs or --p/--r, not both")
        try:
            return read_pairs(args.pairs)
        except OSError as exc:
            raise InputError(f"cannot read {args.pairs}: {exc.strerror}") from None
    if args.p is None or args.r is None:
        raise InputError("both --p and --r are required (or --pairs)")
    return [(parse_quaternion(args.p, "--p"), parse_quaternion(args.r, "--r"))]


def _config(args) -> KLIConfig:
    step = args.delta if args.step is None else args.step
    try:
        return KLIConfig(args.epsilon, args.delta, step, args.t_max, args.shortest)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _out_path(out: Path | None, index: int | None, tag: str = "") -> Path | None:
    if out is None:
        return None
    if index is None and not tag:
        return out
    suffix = f"_{index}" if index is not None else ""
    return out.with_name(f"{out.stem}{suffix}{tag}{out.suffix}")


def _emit(text: str, path: Path | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        log.info("wrote %s", path)


def run(args) -> int:
    pairs = _endpoints(args)
    fmt = args.format
    if fmt is None:
        fmt = "json" if args.out is not None and args.out.suffix.lower() == ".json" else "csv"
    batch = args.pairs is not None
    if batch and len(pairs) > 1 and args.out is None:
        raise InputError("--pairs with more than one pair requires --out")
    cfg = _config(args) if args.method in ("kli", "compare") else None
    times = _parse_times(args.frames) if getattr(args, "frames", None) else None
    if times is not None and args.out is None:
        raise InputError("--frames requires --out")

    reports = []
    for i, (p, r) in enumerate(pairs):
        index = i if batch else None
        if args.method == "slerp":
            curve = slerp_sample(p, r, args.samples, shortest_path=args.shortest)
            _emit(format_curve(curve, fmt, args.hopf, None, "slerp"), _out_path(args.out, index))
            continue
        curve = kli_interpolate(p, r, cfg)
        log.info("pair %d: converged at T=%s with %d samples", i, curve.converged_time, len(curve))
        if args.method == "compare":
            if curve.converged_time == 0.0:
                reports.append({"max_deviation": 0.0, "endpoint_error": 0.0,
                                "converged_time": 0.0, "sample_count": len(curve)})
            else:
                reports.append(path_deviation(curve, p, curve.target).as_dict())
            continue
        _emit(format_curve(curve, fmt, args.hopf, cfg, "kli"), _out_path(args.out, index))
        if times is not None:
            frames = generate_frames(p, curve.target, times, None, cfg, curve=curve)
            _emit(format_frames(frames, fmt), _out_path(args.out, index, "_frames"))

    if args.method == "compare" and pairs:
        doc = reports[0] if not batch else reports
        _emit(json.dumps(doc, indent=1) + "\n", args.out)
    return EXIT_OK


def _setup_logging():
    level = os.environ.get("INTERP_LOG", "info").strip().lower()
    levels = {"debug": logging.DEBUG, "info": logging.INFO, "quiet": logging.ERROR}
    logging.basicConfig(level=levels.get(level, logging.INFO), format="interp: %(message)s",
                        stream=sys.stderr, force=True)


def main(argv: Sequence[str] | None = None) -> int:
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (AntipodalInput, NonConvergence) as exc:
        print(f"interp: error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (InputError, KLIError, ValueError) as exc:
        print(f"interp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
