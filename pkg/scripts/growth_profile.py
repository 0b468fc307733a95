"""Profile how many distinct transformations words of each length name.

For every length up to a bound, prints the number of distinct machine
transformations among all words of that length or shorter, the number that
are new at that length, and the count a free semigroup would show (the
rank is the number of distinct generator states).  A column that matches
the free reference exactly means no relation has appeared yet; a stalled
column means the machine semigroup is finite.

Usage:
  python scripts/growth_profile.py family:cyclic_group:2 --max-len 8
  python scripts/growth_profile.py table.txt
"""

from __future__ import annotations

import argparse
import sys

from cayleysg import (
    MalformedTableError,
    NotAssociativeError,
    SizeCapError,
    TableParseError,
    UnknownFamilyError,
    WorkCapError,
    count_distinct_words,
)
from cayleysg.cli import load_input
from cayleysg.engine import WORK_CAP


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="distinct transformation counts per word length"
    )
    parser.add_argument("input", help="table file, '-' for stdin, or family:NAME[:PARAMS]")
    parser.add_argument("--max-len", type=int, default=6)
    parser.add_argument("--work-cap", type=int, default=WORK_CAP)
    args = parser.parse_args(argv)

    try:
        S = load_input(args.input)
    except NotAssociativeError as err:
        print("error: %s" % err, file=sys.stderr)
        return 3
    except (
        TableParseError,
        MalformedTableError,
        UnknownFamilyError,
        SizeCapError,
    ) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2

    rank = len(set(S.rows))
    print("order %d, %d distinct generator states" % (S.order, rank))
    print("length  distinct  new  free reference")
    previous = 0
    for length in range(1, args.max_len + 1):
        try:
            total = count_distinct_words(S, length, args.work_cap)
        except WorkCapError as err:
            print("stopped at length %d: %s" % (length, err))
            break
        free_reference = sum(rank**k for k in range(1, length + 1))
        print(
            "%6d  %8d  %4d  %14d"
            % (length, total, total - previous, free_reference)
        )
        previous = total
    return 0


if __name__ == "__main__":
    sys.exit(main())
