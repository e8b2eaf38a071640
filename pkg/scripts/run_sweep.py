#!/usr/bin/env python3
"""Run the full verification sweep over every family and print the table.

Equivalent to `qflab sweep --families all --n-max N`; kept as a script so the
matrix is one command away during experiments.
"""

import argparse
import sys

from qflab.cli import main as qflab_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=11)
    parser.add_argument("--families", default="all")
    args = parser.parse_args()
    return qflab_main(["sweep", "--families", args.families, "--n-max", str(args.n_max)])


if __name__ == "__main__":
    sys.exit(main())
