#!/usr/bin/env python3
"""Rank the catalogued zeta(3) representations by convergence speed.

Prints a markdown table at a few tolerances; the per-row wall times come
from a cache-warm second evaluation, so they reflect steady-state cost.
"""

import argparse

from zetakit.convergence import compare, export


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tols", type=float, nargs="+", default=[1e-6, 1e-10, 1e-12])
    parser.add_argument("--target", default="zeta3")
    args = parser.parse_args()

    for tol in args.tols:
        print(f"\n## target={args.target} tolerance={tol:g}\n")
        print(export(compare(args.target, tol), "markdown"))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
