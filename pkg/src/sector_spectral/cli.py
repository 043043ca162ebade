"""Command-line entry point.

Usage::

    sector-spectral <command> [--W 100,200 --beta 0.5pi --K 5:95:5 --d 20
                               --T 1000 --T-train 800 --trials 20
                               --lambda 1e-5 --seed 1729 --r-min 0.85
                               --r-max 0.95 --out results --jobs 1]

Commands: spectrum, tomography, dim-ablation, basis-ablation, lower-bound,
theory-checks. Beta accepts raw radians or multiples of pi ("0.5pi").
K accepts a comma list or an inclusive start:stop:step range. Exit codes:
0 success, 2 when a verification check fails, 1 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .experiments import DEFAULT_SEED, RUNNERS, ExperimentConfig, run_command


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_beta(text: str) -> float:
    t = text.strip().lower()
    if t.endswith("pi"):
        mult = t[:-2].strip()
        return (float(mult) if mult else 1.0) * np.pi
    return float(t)


def parse_beta_list(text):
    return [parse_beta(p) for p in text.split(",") if p.strip()]


def parse_int_list(text):
    return [int(p) for p in text.split(",") if p.strip()]


def parse_K(text: str):
    """Comma list ("5,10,20") or inclusive range ("5:95:5")."""
    if ":" in text:
        parts = [int(p) for p in text.split(":")]
        if len(parts) == 2:
            start, stop, step = parts[0], parts[1], 1
        elif len(parts) == 3:
            start, stop, step = parts
        else:
            raise ValueError(f"bad K range: {text}")
        return list(range(start, stop + 1, step))
    return parse_int_list(text)


def build_parser():
    parser = _Parser(prog="sector-spectral",
                     description="Spectral-filtering experiments for sector-bounded systems")
    parser.add_argument("command", choices=sorted(RUNNERS))
    parser.add_argument("--W", type=parse_int_list, default=None,
                        help="window length(s), comma separated")
    parser.add_argument("--beta", type=parse_beta_list, default=None,
                        help="sector half-angle(s); radians or 'Xpi'")
    parser.add_argument("--K", type=parse_K, default=None,
                        help="bank sizes: comma list or start:stop:step")
    parser.add_argument("--d", type=parse_int_list, default=None,
                        help="hidden dimension(s)")
    parser.add_argument("--T", type=int, default=1000)
    parser.add_argument("--T-train", type=int, default=800, dest="T_train")
    parser.add_argument("--trials", type=int, default=None)
    parser.add_argument("--lambda", type=float, default=1e-5, dest="lam")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--r-min", type=float, default=0.85, dest="r_min")
    parser.add_argument("--r-max", type=float, default=0.95, dest="r_max")
    parser.add_argument("--out", type=str, default="results")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--fast", action="store_true",
                        help="reduced sizes for smoke runs (theory-checks)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = ExperimentConfig(
            command=ns.command, W=ns.W, beta=ns.beta, K=ns.K, d=ns.d,
            T=ns.T, T_train=ns.T_train, trials=ns.trials, lam=ns.lam,
            seed=ns.seed, r_min=ns.r_min, r_max=ns.r_max, out=ns.out,
            jobs=ns.jobs, fast=ns.fast,
        )
    except ValueError as exc:
        print(f"sector-spectral: {exc}", file=sys.stderr)
        return 1
    try:
        ok = run_command(cfg, Path(ns.out))
    except OSError as exc:
        print(f"sector-spectral: I/O error: {exc}", file=sys.stderr)
        return 1
    if not ok:
        print(f"sector-spectral: {ns.command}: verification checks failed",
              file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
