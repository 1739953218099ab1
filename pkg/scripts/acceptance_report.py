#!/usr/bin/env python3
"""Run every verification suite and print a one-line-per-suite summary.

Equivalent to ``spinmod verify all`` but with a compact closing table;
useful as a quick health check after edits.

Usage: python scripts/acceptance_report.py [--seed 7]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from spinmod.verify import run_all  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()
    reports = run_all(seed=args.seed)
    for report in reports:
        print(report.render(show_time=True))
        print()
    width = max(len(r.name) for r in reports)
    print("=" * (width + 18))
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        print(f"{report.name:<{width}}  {status}  {report.elapsed:7.1f}s")
    print("=" * (width + 18))
    total = sum(r.elapsed for r in reports)
    passed = sum(r.passed for r in reports)
    print(f"{passed}/{len(reports)} suites passed in {total:.1f}s")
    return 0 if passed == len(reports) else 1


if __name__ == "__main__":
    sys.exit(main())
