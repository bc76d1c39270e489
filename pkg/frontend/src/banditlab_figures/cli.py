"""render-figures: batch-render the reference figures from experiment CSVs."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import FIGURES, RenderInputError, render_all


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="render-figures",
        description="Render the six reference figures from banditlab CSVs")
    parser.add_argument("--in", dest="in_dir", required=True,
                        help="directory holding the experiment CSV files")
    parser.add_argument("--out", dest="out_dir", required=True,
                        help="directory for the PNG output")
    parser.add_argument("--only", choices=sorted(FIGURES),
                        help="render a single figure id")
    args = parser.parse_args(argv)
    try:
        paths = render_all(Path(args.in_dir), Path(args.out_dir), args.only)
    except RenderInputError as exc:
        print(f"render-figures: {exc}", file=sys.stderr)
        return 1
    for path in paths:
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
