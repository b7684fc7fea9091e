#!/usr/bin/env python3
"""Regenerate the four figure sweeps as CSV files.

Each file holds the exact data behind one plot; any plotting tool can
consume them. Reruns are byte-identical.
"""
import argparse
import dataclasses
from pathlib import Path

from coherence_bounds.cli import FIGURES, render_figure_csv


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="data", help="output directory (default ./data)")
    parser.add_argument("--steps", type=int, default=101, help="grid points per sweep")
    return parser.parse_args()


def main():
    args = parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for which in sorted(FIGURES):
        config = FIGURES[which]
        if args.steps != config.steps:
            config = dataclasses.replace(config, steps=args.steps)
        path = outdir / f"figure{which}.csv"
        path.write_text(render_figure_csv(config), encoding="utf-8")
        print(f"wrote {path} ({config.family}, {config.steps} points)")


if __name__ == "__main__":
    main()
