"""Run every default suite and write one JSON report.

    python scripts/run_desk_verification.py --report desk_report.json [--long]
"""

import argparse
import sys

from dcminor.cli import RunOptions, run


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--report", default="desk_report.json")
    ap.add_argument("--long", action="store_true", help="include t = 5 for kt-plus-k1")
    args = ap.parse_args()
    return run(args.report, ["all"], RunOptions(long=args.long))


if __name__ == "__main__":
    sys.exit(main())
