"""Batch figure rendering from an experiment output directory."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .data import MissingColumns
from .render import KINDS, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spikepred-figures",
        description="Render rate, weight, raster, and topology figures "
                    "from a completed experiment directory")
    parser.add_argument("experiment_dir", help="directory with aggregate.csv and seed_* runs")
    parser.add_argument("--kind", choices=KINDS, action="append", required=False,
                        help="figure kind; repeatable (default: all four)")
    parser.add_argument("--out-dir", default=None,
                        help="where images go (default: <experiment_dir>/figures)")
    parser.add_argument("--groups", nargs="*", default=[],
                        help="restrict rate/weight curves to these groups")
    parser.add_argument("--epoch-ms", type=int, default=3000,
                        help="raster panel width in ms (default 3000)")
    parser.add_argument("--seed-dir", default="",
                        help="run subdirectory for raster/topology (default: first)")
    parser.add_argument("--format", default="png", choices=("png", "svg", "pdf"))
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    experiment_dir = Path(args.experiment_dir)
    out_dir = Path(args.out_dir) if args.out_dir else experiment_dir / "figures"
    kinds = args.kind or list(KINDS)
    try:
        for kind in kinds:
            spec = FigureSpec(
                experiment_dir=experiment_dir, kind=kind,
                out_path=out_dir / f"{kind}.{args.format}",
                groups=list(args.groups), epoch_ms=args.epoch_ms,
                seed_dir=args.seed_dir)
            path = render(spec)
            print(f"wrote {path}")
    except (FileNotFoundError, MissingColumns, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
