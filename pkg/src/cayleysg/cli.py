"""Command line interface.

Tables come from a file, from stdin ('-'), or from a built-in family via
'family:NAME' or 'family:NAME:PARAMS', e.g. family:cyclic_group:6 or
family:rectangular_band:2,3.  All indices on the command line and in the
JSON output are 1-based.

Exit codes: 0 success, 2 unreadable or malformed input, 3 a well-formed
table that is not associative, 4 a verify run that found disagreements.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify, report_to_json
from .core import (
    MalformedTableError,
    NotAssociativeError,
    SizeCapError,
    UnknownFamilyError,
    named_family,
)
from .corpus import DEDUP_MODES, CorpusSpec, dump_line, generate_tables
from .engine import Closed, enumerate_semigroup, act
from .machine import build_cayley_machine, machine_to_dot
from .tableio import TableParseError, parse_table
from .verify import run_verify

PARSE_ERROR = 2
ASSOCIATIVITY_ERROR = 3
DISAGREEMENT = 4


def load_input(token: str):
    """A table from 'family:NAME[:P1,P2]', a path, or '-' for stdin."""
    if token.startswith("family:"):
        parts = token.split(":")
        name = parts[1]
        params = []
        if len(parts) > 2 and parts[2]:
            try:
                params = [int(p) for p in parts[2].split(",")]
            except ValueError:
                raise TableParseError("bad family parameters in %r" % token)
        if len(parts) > 3:
            raise TableParseError("bad family reference %r" % token)
        try:
            return named_family(name, *params)
        except TypeError as err:
            raise TableParseError("family %r: %s" % (name, err))
    if token == "-":
        return parse_table(sys.stdin.read())
    try:
        with open(token, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as err:
        raise TableParseError("cannot read %r: %s" % (token, err))
    return parse_table(text)


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_letters(raw: str, what: str):
    if raw == "":
        return ()
    try:
        values = [int(p) for p in raw.split(",")]
    except ValueError:
        raise TableParseError("bad %s %r, expected comma separated integers" % (what, raw))
    if any(v < 1 for v in values):
        raise TableParseError("%s entries are 1-based, got %r" % (what, raw))
    return tuple(v - 1 for v in values)


def cmd_classify(args) -> int:
    S = load_input(args.input)
    print(json.dumps(report_to_json(classify(S)), indent=2))
    return 0


def cmd_machine(args) -> int:
    S = load_input(args.input)
    _write(args.dot, machine_to_dot(build_cayley_machine(S)))
    return 0


def cmd_enumerate(args) -> int:
    S = load_input(args.input)
    result = enumerate_semigroup(S, args.budget)
    if isinstance(result, Closed):
        payload = {
            "status": "Closed",
            "element_count": len(result.elements),
            "cayley": [[v + 1 for v in row] for row in result.cayley],
            "generator_map": [e + 1 for e in result.generator_map],
        }
    else:
        payload = {
            "status": "Exceeded",
            "count_reached": result.count_reached,
            "capped": result.capped,
        }
    print(json.dumps(payload, indent=2))
    return 0


def cmd_act(args) -> int:
    S = load_input(args.input)
    word = _parse_letters(args.word, "word")
    prefix = _parse_letters(args.prefix, "prefix")
    if not word:
        raise TableParseError("word must be non-empty")
    for a in word + prefix:
        if a >= S.order:
            raise TableParseError("element %d out of range 1..%d" % (a + 1, S.order))
    out = act(S, word, prefix)
    print(",".join(str(x + 1) for x in out))
    return 0


def cmd_verify(args) -> int:
    report = run_verify(
        args.max_order, budget=args.budget, free_len=args.free_len, dedup=args.dedup
    )
    text = json.dumps(report.to_json(), indent=2) + "\n"
    _write(args.out, text)
    if args.out not in (None, "-"):
        summary = "checked %d tables: %d disagreements, %d inconclusive" % (
            report.tables_checked,
            len(report.disagreements),
            len(report.inconclusive),
        )
        print(summary)
    return DISAGREEMENT if report.disagreements else 0


def cmd_corpus(args) -> int:
    lines = []
    for S in generate_tables(CorpusSpec(args.order, args.dedup)):
        lines.append(dump_line(S))
    _write(args.out, "".join(line + "\n" for line in lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleysg",
        description="finite semigroups and the semigroups their Cayley machines generate",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="structural report on the generated semigroup")
    p.add_argument("input", help="table file, '-' for stdin, or family:NAME[:PARAMS]")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("machine", help="write the Cayley machine as Graphviz text")
    p.add_argument("input")
    p.add_argument("--dot", default="-", help="output path ('-' for stdout)")
    p.set_defaults(func=cmd_machine)

    p = sub.add_parser("enumerate", help="enumerate the generated semigroup")
    p.add_argument("input")
    p.add_argument("--budget", type=int, default=10_000)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("act", help="apply the transformation of a word to a prefix")
    p.add_argument("input")
    p.add_argument("--word", required=True, help="comma separated 1-based elements")
    p.add_argument("--prefix", required=True, help="comma separated 1-based letters")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("verify", help="cross-check classifier and engine on a corpus")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--free-len", type=int, default=4)
    p.add_argument("--dedup", choices=DEDUP_MODES, default="up_to_iso_anti")
    p.add_argument("--out", default=None, help="report path (default stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="dump all tables of one order, one per line")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dedup", choices=DEDUP_MODES, default="up_to_iso_anti")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotAssociativeError as err:
        print("error: %s" % err, file=sys.stderr)
        return ASSOCIATIVITY_ERROR
    except (
        TableParseError,
        MalformedTableError,
        UnknownFamilyError,
        SizeCapError,
        ValueError,
    ) as err:
        print("error: %s" % err, file=sys.stderr)
        return PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
