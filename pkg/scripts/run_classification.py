#!/usr/bin/env python3
"""Full 256-rule classification at the default measurement parameters.

Writes ranking.csv, report.json, conjecture1.txt and a manifest under
results/classification/.  Pass --threads to parallelize across rules.
"""

import argparse
import sys
from pathlib import Path

from translens.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=64)
    parser.add_argument("--schedule", type=str, default="50,100,150,200")
    parser.add_argument("--threads", type=int, default=4)
    parser.add_argument(
        "--out", type=str, default=str(Path("results") / "classification")
    )
    args = parser.parse_args()
    return cli_main(
        [
            "classify",
            "--n", str(args.n),
            "--schedule", args.schedule,
            "--out", args.out,
            "--threads", str(args.threads),
        ]
    )


if __name__ == "__main__":
    sys.exit(main())
