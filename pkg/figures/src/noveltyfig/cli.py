"""Command line entry point: render_figures --in DIR --out DIR."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import render_all


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_figures",
        description="Render the standard figures from experiment CSV outputs.",
    )
    parser.add_argument("--in", dest="in_dir", type=Path, required=True,
                        help="directory holding the experiment CSVs")
    parser.add_argument("--out", dest="out_dir", type=Path, required=True,
                        help="directory for the rendered images")
    parser.add_argument("--strict", action="store_true",
                        help="fail on missing inputs instead of skipping")
    parser.add_argument("--format", choices=("png", "svg"), default="png")
    args = parser.parse_args(argv)

    try:
        produced = render_all(
            args.in_dir, args.out_dir, image_format=args.format, strict=args.strict
        )
    except (FileNotFoundError, ValueError) as err:
        print(str(err), file=sys.stderr)
        return 1
    for name, path in produced.items():
        print(f"{name}: {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
