#!/usr/bin/env python3
"""Run the full identity verification suite and save the JSON report.

Exit status mirrors the CLI: 0 when everything except the documented
published-variant discrepancies passes, 3 if anything was inconclusive,
1 on any other failure.
"""

import argparse
import sys

from zetakit.verifier import reports_to_json, reports_to_text, verify_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tol", type=float, default=1e-9)
    parser.add_argument("--param-limit", type=int, default=12)
    parser.add_argument("--out", default="identity_report.json")
    args = parser.parse_args()

    reports = verify_all(args.tol, args.param_limit)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(reports_to_json(reports))
    print(reports_to_text(reports))
    print(f"\n{len(reports)} checks -> {args.out}")

    if any(r.inconclusive for r in reports):
        return 3
    if any(not r.passed and r.variant != "printed" for r in reports):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
