"""Plain text multiplication tables.

Format: '#' starts a comment (whole line or trailing), blank lines are
skipped, the first data line is the order n, the next n data lines hold n
entries each (1-based element indices), and an optional final data line
'names: a b c ...' attaches display names.
"""

from __future__ import annotations

from .core import MulTable, MalformedTableError, make_table


class TableParseError(ValueError):
    """The text is not a well-formed table file."""


def parse_table(text: str) -> MulTable:
    """Parse a table file; raises TableParseError for malformed input and
    NotAssociativeError (from make_table) for a well-formed table of a
    non-associative operation."""
    data = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            data.append(line)
    if not data:
        raise TableParseError("no table data")
    try:
        n = int(data[0])
    except ValueError:
        raise TableParseError("first data line must be the order, got %r" % data[0])
    if n < 1:
        raise TableParseError("order must be positive, got %d" % n)
    if len(data) < n + 1:
        raise TableParseError("expected %d rows, found %d" % (n, len(data) - 1))
    rows = []
    for idx, line in enumerate(data[1 : n + 1]):
        fields = line.split()
        if len(fields) != n:
            raise TableParseError(
                "row %d has %d entries, expected %d" % (idx + 1, len(fields), n)
            )
        row = []
        for field in fields:
            try:
                value = int(field)
            except ValueError:
                raise TableParseError("bad entry %r in row %d" % (field, idx + 1))
            if not 1 <= value <= n:
                raise TableParseError(
                    "entry %d in row %d out of range 1..%d" % (value, idx + 1, n)
                )
            row.append(value - 1)
        rows.append(row)
    names = None
    extra = data[n + 1 :]
    if extra:
        if len(extra) > 1 or not extra[0].startswith("names:"):
            raise TableParseError("unexpected trailing data: %r" % extra[0])
        names = extra[0][len("names:") :].split()
        if len(names) != n:
            raise TableParseError(
                "names line has %d entries, expected %d" % (len(names), n)
            )
    try:
        return make_table(rows, names)
    except MalformedTableError as err:
        raise TableParseError(str(err))


def format_table(S: MulTable) -> str:
    """Render a table in the file format; parse_table inverts this."""
    lines = [str(S.order)]
    width = len(str(S.order))
    for row in S.rows:
        lines.append(" ".join(str(v + 1).rjust(width) for v in row))
    if S.names is not None:
        lines.append("names: " + " ".join(S.names))
    return "\n".join(lines) + "\n"
