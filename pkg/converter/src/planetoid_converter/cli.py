"""planetoid-convert: raw Planetoid pickles to plain-text dataset directories."""
from __future__ import annotations

import argparse
import sys

from .convert import ConvertError, convert


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="planetoid-convert",
        description="Convert raw Planetoid files (ind.<name>.*) into a "
                    "plain-text dataset directory.")
    parser.add_argument("names", nargs="+",
                        help="dataset names, e.g. citeseer cora pubmed")
    parser.add_argument("--raw-dir", required=True,
                        help="directory holding the ind.* files")
    parser.add_argument("--out-root", required=True,
                        help="output root; each dataset gets its own subdirectory")
    args = parser.parse_args(argv)
    for name in args.names:
        try:
            convert(args.raw_dir, name, f"{args.out_root}/{name}")
        except ConvertError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
