"""Exhaustive streams of small multiplication tables.

generate_tables fills the n x n table cell by cell, pruning with every
associativity instance whose four lookups are already determined; complete
tables are therefore associative by construction (and revalidated anyway).
Deduplication keeps a table iff it equals its own canonical form, so each
isomorphism (or isomorphism-or-antiisomorphism) class is emitted exactly
once without storing the stream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import MulTable, SizeCapError, make_table

# Full enumeration is only sane for tiny orders; canonical forms go a bit
# further since they only pay n! per call.
ENUMERATION_CAP = 4
CANONICAL_CAP = 6

DEDUP_MODES = ("labeled", "up_to_iso", "up_to_iso_anti")
FILL_ORDERS = ("row_major", "column_major")


@dataclass(frozen=True)
class CorpusSpec:
    """What to stream: the order and the deduplication mode."""

    order: int
    dedup: str = "labeled"


def _flat(rows):
    return tuple(v for row in rows for v in row)


def _relabeled(rows, perm):
    """The table of the same operation after renaming x to perm[x]."""
    n = len(rows)
    inverse = [0] * n
    for x, px in enumerate(perm):
        inverse[px] = x
    return tuple(
        tuple(perm[rows[inverse[i]][inverse[j]]] for j in range(n)) for i in range(n)
    )


def _transposed(rows):
    n = len(rows)
    return tuple(tuple(rows[j][i] for j in range(n)) for i in range(n))


def canonical_form(rows, mode: str = "up_to_iso") -> bytes:
    """Least serialization of the table over all relabelings; with mode
    'up_to_iso_anti' the transpose participates too, so mutually
    antiisomorphic tables share their form.  Order above 6 raises
    SizeCapError ('labeled' skips the search and never does).
    """
    if mode not in DEDUP_MODES:
        raise ValueError("unknown dedup mode %r" % mode)
    if hasattr(rows, "rows"):
        rows = rows.rows
    n = len(rows)
    if mode == "labeled":
        return _serialize(n, _flat(rows))
    if n > CANONICAL_CAP:
        raise SizeCapError("order %d exceeds cap %d" % (n, CANONICAL_CAP))
    variants = [rows]
    if mode == "up_to_iso_anti":
        variants.append(_transposed(rows))
    best = None
    for table in variants:
        for perm in itertools.permutations(range(n)):
            flat = _flat(_relabeled(table, perm))
            if best is None or flat < best:
                best = flat
    return _serialize(n, best)


def _serialize(n, flat):
    return ("%d:" % n + ",".join(map(str, flat))).encode("ascii")


def generate_tables(spec: CorpusSpec, fill_order: str = "row_major"):
    """Stream every associative table of the given order as MulTables.

    With dedup 'up_to_iso' or 'up_to_iso_anti' only canonical
    representatives are yielded.  The fill order ('row_major' or
    'column_major') changes the search tree but not the stream's content
    in labeled mode nor the set of representatives; it exists so the
    corpus can be cross-checked against itself.
    """
    n = spec.order
    if n < 1:
        raise ValueError("order must be positive")
    if n > ENUMERATION_CAP:
        raise SizeCapError("order %d exceeds cap %d" % (n, ENUMERATION_CAP))
    if spec.dedup not in DEDUP_MODES:
        raise ValueError("unknown dedup mode %r" % spec.dedup)
    if fill_order == "row_major":
        cells = [(i, j) for i in range(n) for j in range(n)]
    elif fill_order == "column_major":
        cells = [(i, j) for j in range(n) for i in range(n)]
    else:
        raise ValueError("unknown fill order %r" % fill_order)

    grid = [[-1] * n for _ in range(n)]
    triples = list(itertools.product(range(n), repeat=3))

    def consistent():
        # Sound and complete pruning for these sizes: recheck every triple
        # whose four lookups are all determined.
        for a, b, c in triples:
            ab = grid[a][b]
            if ab < 0:
                continue
            bc = grid[b][c]
            if bc < 0:
                continue
            left = grid[ab][c]
            right = grid[a][bc]
            if left >= 0 and right >= 0 and left != right:
                return False
        return True

    def fill(depth):
        if depth == len(cells):
            yield make_table(grid)
            return
        i, j = cells[depth]
        for v in range(n):
            grid[i][j] = v
            if consistent():
                yield from fill(depth + 1)
        grid[i][j] = -1

    stream = fill(0)
    if spec.dedup == "labeled":
        yield from stream
        return
    for table in stream:
        if canonical_form(table.rows, spec.dedup) == _serialize(n, _flat(table.rows)):
            yield table


def dump_line(S: MulTable) -> str:
    """One-line form of a table: order and rows (1-based), ';' separated."""
    parts = [str(S.order)]
    parts.extend(" ".join(str(v + 1) for v in row) for row in S.rows)
    return ";".join(parts)


def load_dump_line(line: str) -> MulTable:
    """Inverse of dump_line."""
    parts = line.strip().split(";")
    n = int(parts[0])
    rows = [[int(v) - 1 for v in part.split()] for part in parts[1 : n + 1]]
    return make_table(rows)


def find_isomorphism(rows_a, rows_b):
    """A bijection p with p(x*y) = p(x)*p(y), or None.

    Backtracking over images, pruning with relabeling-invariant signatures
    (idempotency, occurrence counts, distinct values per row and column).
    """
    n = len(rows_a)
    if len(rows_b) != n:
        return None

    def signature(rows, x):
        occurrences = sum(row.count(x) for row in rows)
        row_values = len(set(rows[x]))
        col_values = len({rows[y][x] for y in range(n)})
        return (rows[x][x] == x, occurrences, row_values, col_values)

    sig_a = [signature(rows_a, x) for x in range(n)]
    sig_b = [signature(rows_b, x) for x in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None

    image = [-1] * n
    used = [False] * n

    def compatible(x):
        for y in range(n):
            if image[y] < 0:
                continue
            xy = rows_a[x][y]
            yx = rows_a[y][x]
            if image[xy] >= 0 and rows_b[image[x]][image[y]] != image[xy]:
                return False
            if image[yx] >= 0 and rows_b[image[y]][image[x]] != image[yx]:
                return False
        return True

    def assign(x):
        if x == n:
            # compatible() only sees pairs whose product is already placed,
            # so confirm the finished map on every pair.
            return all(
                rows_b[image[a]][image[b]] == image[rows_a[a][b]]
                for a in range(n)
                for b in range(n)
            )
        for candidate in range(n):
            if used[candidate] or sig_b[candidate] != sig_a[x]:
                continue
            image[x] = candidate
            used[candidate] = True
            if compatible(x) and assign(x + 1):
                return True
            image[x] = -1
            used[candidate] = False
        return False

    if assign(0):
        return tuple(image)
    return None
