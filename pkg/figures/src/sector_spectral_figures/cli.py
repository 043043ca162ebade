"""figures render --id <spectrum|tomography|dim|basis> --in <csv...> --out <path>"""

from __future__ import annotations

import argparse
import sys

from .io import SchemaError
from .render import BUILDERS, render


def build_parser():
    parser = argparse.ArgumentParser(prog="figures")
    sub = parser.add_subparsers(dest="action", required=True)
    rend = sub.add_parser("render", help="render one figure from experiment CSVs")
    rend.add_argument("--id", required=True, choices=sorted(BUILDERS),
                      dest="figure_id")
    rend.add_argument("--in", required=True, nargs="+", dest="inputs",
                      help="input CSV path(s)")
    rend.add_argument("--out", required=True, help="output image path (.png or .svg)")
    return parser


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        info = render(ns.figure_id, ns.inputs, ns.out)
    except SchemaError as exc:
        print(f"figures: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"figures: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {ns.out}: {info.n_series} series, "
          f"markers at {info.marker_positions}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
