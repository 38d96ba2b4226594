#!/usr/bin/env python3
"""Record the conjecture experiments.

Runs the full classification (whose report carries the rule-positivity
flags) and the Busy Beaver champion coefficients, writing both under
results/.  Signs are recorded as experimental outcomes, not asserted.
"""

import argparse
import sys
from pathlib import Path

from translens.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=64)
    parser.add_argument("--schedule", type=str, default="50,100,150,200")
    parser.add_argument("--bb-states", type=int, default=2)
    parser.add_argument("--threads", type=int, default=4)
    parser.add_argument("--out", type=str, default="results")
    args = parser.parse_args()
    root = Path(args.out)
    status = cli_main(
        [
            "classify",
            "--n", str(args.n),
            "--schedule", args.schedule,
            "--out", str(root / "classification"),
            "--threads", str(args.threads),
        ]
    )
    if status:
        return status
    return cli_main(
        [
            "conjecture3",
            "--bb-states", str(args.bb_states),
            "--n", str(args.n),
            "--schedule", args.schedule,
            "--out", str(root / "conjecture3"),
            "--threads", str(args.threads),
        ]
    )


if __name__ == "__main__":
    sys.exit(main())
