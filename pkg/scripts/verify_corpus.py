"""Cross-check the classifier against brute enumeration over a corpus.

Runs every structural predicate next to its engine-side recomputation for
all tables up to a given order and prints a summary plus every
disagreement or inconclusive record.  A disagreement means the closed-form
characterizations and the machine engine disagree about some table; the
exit code is then 4, matching the CLI verify subcommand.

Usage:
  python scripts/verify_corpus.py --max-order 3
  python scripts/verify_corpus.py --max-order 4 --dedup up_to_iso --json report.json
"""

from __future__ import annotations

import argparse
import json
import sys

from cayleysg import run_verify
from cayleysg.corpus import DEDUP_MODES


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="cross-check classifier and engine over all small tables"
    )
    parser.add_argument("--max-order", type=int, default=3)
    parser.add_argument("--budget", type=int, default=10_000)
    parser.add_argument("--free-len", type=int, default=4)
    parser.add_argument("--dedup", choices=DEDUP_MODES, default="up_to_iso_anti")
    parser.add_argument("--json", dest="json_path", default=None,
                        help="also write the full report to this path")
    args = parser.parse_args(argv)

    def progress(order, count):
        print("\rchecked %d tables (now at order %d)" % (count, order),
              end="", file=sys.stderr)

    report = run_verify(
        args.max_order,
        budget=args.budget,
        free_len=args.free_len,
        dedup=args.dedup,
        progress=progress,
    )
    print(file=sys.stderr)

    print(
        "checked %d tables in %.1fs: %d checks passed, "
        "%d disagreements, %d inconclusive"
        % (
            report.tables_checked,
            report.elapsed_seconds,
            report.checks_passed,
            len(report.disagreements),
            len(report.inconclusive),
        )
    )
    for item in report.disagreements:
        print("DISAGREEMENT %s" % json.dumps(item))
    for item in report.inconclusive:
        print("inconclusive %s" % json.dumps(item))

    if args.json_path is not None:
        with open(args.json_path, "w", encoding="utf-8") as handle:
            json.dump(report.to_json(), handle, indent=2)
            handle.write("\n")

    return 4 if report.disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
