"""CLI: dirswarm-plot --metric reachability_mean --in a.csv b.csv --out fig.png"""

from __future__ import annotations

import argparse
import sys

from .render import PlotSpec, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="dirswarm-plot",
        description="Line chart of a swarm metric from aggregate run CSVs",
    )
    parser.add_argument("--metric", required=True,
                        help="CSV column to plot (e.g. reachability_mean)")
    parser.add_argument("--in", dest="inputs", nargs="+", required=True,
                        help="aggregate CSV paths, one curve each")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--smooth", type=int, default=50,
                        help="display rolling-mean window (1 = raw)")
    parser.add_argument("--title")
    args = parser.parse_args(argv)

    spec = PlotSpec(
        inputs=tuple(args.inputs),
        metric=args.metric,
        out_path=args.out,
        smooth_window=args.smooth,
        title=args.title,
    )
    print(render(spec))
    return 0


if __name__ == "__main__":
    sys.exit(main())
