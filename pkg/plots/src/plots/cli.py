"""CLI: `plots heatmap <grid.csv> --out <dir>` and
`plots drift <mcmc.csv> <hybrid.csv> --out <dir>`."""

from __future__ import annotations

import argparse
import sys

from .drift import save_drift
from .heatmap import save_heatmaps
from .io import SchemaError, load_drift, load_grid


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plots", description="Render gensemble CSV outputs as figures"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_heat = sub.add_parser("heatmap", help="success-ratio and diversity heatmaps")
    p_heat.add_argument("grid_csv")
    p_heat.add_argument("--out", required=True)

    p_drift = sub.add_parser("drift", help="overlaid drift-density comparison")
    p_drift.add_argument("mcmc_csv")
    p_drift.add_argument("hybrid_csv")
    p_drift.add_argument("--out", required=True)
    p_drift.add_argument(
        "--bandwidth",
        type=float,
        default=None,
        help="KDE bandwidth factor (default: rule of thumb)",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "heatmap":
            paths = save_heatmaps(load_grid(args.grid_csv), args.out)
            for p in paths:
                print(p)
        else:
            print(save_drift(load_drift(args.mcmc_csv), load_drift(args.hybrid_csv),
                             args.out, bandwidth=args.bandwidth))
    except (SchemaError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
