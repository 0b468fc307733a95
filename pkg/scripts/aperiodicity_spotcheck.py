"""Check whether enumerated machine semigroups are always H-trivial.

Whether every finite Cayley machine semigroup is H-trivial is an open
question; this script gathers experimental evidence.  For every table in
the small-order corpus it enumerates the generated semigroup and, when the
enumeration closes, recomputes the H-classes of the result.  Any
counterexample is printed with the input table that produced it.

Usage:
  python scripts/aperiodicity_spotcheck.py --max-order 3
  python scripts/aperiodicity_spotcheck.py --max-order 4 --dedup labeled --budget 2000
"""

from __future__ import annotations

import argparse
import sys

from cayleysg import (
    Closed,
    CorpusSpec,
    enumerate_semigroup,
    generate_tables,
    is_h_trivial,
    make_table,
)
from cayleysg.corpus import DEDUP_MODES, dump_line


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="look for a finite machine semigroup that is not H-trivial"
    )
    parser.add_argument("--max-order", type=int, default=3)
    parser.add_argument("--budget", type=int, default=10_000)
    parser.add_argument("--dedup", choices=DEDUP_MODES, default="up_to_iso_anti")
    args = parser.parse_args(argv)

    closed = 0
    exceeded = 0
    largest = 0
    counterexamples = []
    for order in range(1, args.max_order + 1):
        for S in generate_tables(CorpusSpec(order, args.dedup)):
            result = enumerate_semigroup(S, args.budget)
            if not isinstance(result, Closed):
                exceeded += 1
                continue
            closed += 1
            largest = max(largest, len(result.elements))
            if not is_h_trivial(make_table(result.cayley)):
                counterexamples.append(dump_line(S))
            print("\r%d closed, %d over budget" % (closed, exceeded),
                  end="", file=sys.stderr)
    print(file=sys.stderr)

    print(
        "%d enumerations closed (largest had %d elements), %d exceeded the budget"
        % (closed, largest, exceeded)
    )
    if counterexamples:
        for line in counterexamples:
            print("NOT H-TRIVIAL: %s" % line)
    else:
        print("every closed enumeration was H-trivial")
    return 1 if counterexamples else 0


if __name__ == "__main__":
    sys.exit(main())
