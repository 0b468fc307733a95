"""Multiplication tables of finite semigroups and the maps they induce.

Elements are always the indices 0..n-1; optional names are display labels
only.  Everything downstream (Green's relations, machines, enumeration)
works on plain tuples of ints, so tables are cheap to hash and compare.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

# Constructors refuse to build tables larger than this.
SIZE_CAP = 64


class MalformedTableError(ValueError):
    """The rows do not form a square table with entries in 0..n-1."""


class NotAssociativeError(ValueError):
    """The table fails associativity; ``triple`` holds a failing (a, b, c)."""

    def __init__(self, triple):
        a, b, c = triple
        self.triple = (a, b, c)
        super().__init__(
            "not associative: (a*b)*c != a*(b*c) for a=%d, b=%d, c=%d (1-based)"
            % (a + 1, b + 1, c + 1)
        )


class SizeCapError(ValueError):
    """A constructor would exceed the size cap."""


class UnknownFamilyError(ValueError):
    """No built-in family with the requested name."""


@dataclass(frozen=True)
class MulTable:
    """A finite semigroup given by its multiplication table.

    rows[a][b] is the product a*b.  Instances are built through make_table
    (or the constructors below), which validate shape and associativity.
    """

    rows: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.rows)

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def name_of(self, a: int) -> str:
        return self.names[a] if self.names is not None else str(a + 1)


@dataclass(frozen=True)
class LeftTranslation:
    """The map x -> s*x for a fixed s, stored as its image row."""

    image: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]


def _check_shape(rows):
    n = len(rows)
    if n == 0:
        raise MalformedTableError("empty table")
    for row in rows:
        if len(row) != n:
            raise MalformedTableError(
                "expected %d entries per row, got %d" % (n, len(row))
            )
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise MalformedTableError("entry %r out of range 0..%d" % (v, n - 1))


def associativity_failure(rows):
    """A triple (a, b, c) with (a*b)*c != a*(b*c), or None if associative."""
    n = len(rows)
    for a in range(n):
        row_a = rows[a]
        for b in range(n):
            ab = row_a[b]
            row_ab = rows[ab]
            row_b = rows[b]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    return (a, b, c)
    return None


def check_associativity(rows) -> bool:
    """True iff rows is the table of an associative operation.

    Raises MalformedTableError if rows is not a square table over 0..n-1,
    so a malformed table is never reported as merely non-associative.
    """
    _check_shape(rows)
    return associativity_failure(rows) is None


def make_table(rows, names=None, cap: int | None = SIZE_CAP) -> MulTable:
    """Validate rows (shape, cap, associativity) and build a MulTable."""
    _check_shape(rows)
    if cap is not None and len(rows) > cap:
        raise SizeCapError("order %d exceeds cap %d" % (len(rows), cap))
    fail = associativity_failure(rows)
    if fail is not None:
        raise NotAssociativeError(fail)
    table = tuple(tuple(row) for row in rows)
    if names is not None:
        names = tuple(str(x) for x in names)
        if len(names) != len(table):
            raise MalformedTableError("name count does not match table order")
    return MulTable(table, names)


def left_translation(S: MulTable, s: int) -> LeftTranslation:
    """The left translation by s, i.e. row s of the table."""
    if not 0 <= s < S.order:
        raise IndexError("element %d out of range" % s)
    return LeftTranslation(S.rows[s])


def direct_product(S: MulTable, T: MulTable, cap: int | None = SIZE_CAP) -> MulTable:
    """Componentwise product; the pair (a, b) gets index a*T.order + b.

    Names are paired when both factors are named, otherwise dropped.
    """
    m, k = S.order, T.order
    if cap is not None and m * k > cap:
        raise SizeCapError("order %d exceeds cap %d" % (m * k, cap))
    rows = tuple(
        tuple(S.rows[a][c] * k + T.rows[b][d] for c in range(m) for d in range(k))
        for a in range(m)
        for b in range(k)
    )
    names = None
    if S.names is not None and T.names is not None:
        names = tuple(
            "(%s,%s)" % (S.names[a], T.names[b]) for a in range(m) for b in range(k)
        )
    return MulTable(rows, names)


def left_zero(n: int) -> MulTable:
    """a*b = a."""
    _check_family_order(n)
    return MulTable(tuple(tuple(a for _ in range(n)) for a in range(n)))


def right_zero(n: int) -> MulTable:
    """a*b = b."""
    _check_family_order(n)
    return MulTable(tuple(tuple(range(n)) for _ in range(n)))


def null(n: int) -> MulTable:
    """Every product equals the zero element 0."""
    _check_family_order(n)
    return MulTable(tuple(tuple(0 for _ in range(n)) for _ in range(n)))


def cyclic_group(n: int) -> MulTable:
    """Addition mod n; 0 is the identity."""
    _check_family_order(n)
    return MulTable(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def symmetric_group(n: int) -> MulTable:
    """All permutations of 0..n-1 in lexicographic order, composed so that
    (p*q)(x) = p(q(x)); the identity permutation gets index 0."""
    if n < 1:
        raise ValueError("order must be positive")
    perms = sorted(itertools.permutations(range(n)))
    _check_family_order(len(perms))
    index = {p: i for i, p in enumerate(perms)}
    rows = tuple(
        tuple(index[tuple(p[q[x]] for x in range(n))] for q in perms) for p in perms
    )
    return MulTable(rows)


def rectangular_band(p: int, q: int) -> MulTable:
    """(x, y) * (x', y') = (x, y') on p*q pairs, pair (x, y) at index x*q + y."""
    if p < 1 or q < 1:
        raise ValueError("order must be positive")
    _check_family_order(p * q)
    rows = tuple(
        tuple(x * q + y2 for _ in range(p) for y2 in range(q))
        for x in range(p)
        for _ in range(q)
    )
    return MulTable(rows)


def example_ijkf() -> MulTable:
    """A 4-element semigroup with elements named i, j, k, f.

    Its rows for i, j and f coincide while k's row differs, which makes it
    the smallest interesting input for the machine enumeration: the machine
    states collapse to a 2-element left zero semigroup.
    """
    rows = (
        (0, 1, 2, 0),
        (0, 1, 2, 0),
        (0, 1, 2, 1),
        (0, 1, 2, 0),
    )
    table = MulTable(rows, ("i", "j", "k", "f"))
    assert associativity_failure(table.rows) is None
    return table


_FAMILIES = {
    "left_zero": left_zero,
    "right_zero": right_zero,
    "null": null,
    "cyclic_group": cyclic_group,
    "symmetric_group": symmetric_group,
    "rectangular_band": rectangular_band,
    "example_ijkf": example_ijkf,
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(_FAMILIES))


def named_family(name: str, *params: int) -> MulTable:
    """Construct a built-in family, e.g. named_family('cyclic_group', 6)."""
    try:
        builder = _FAMILIES[name]
    except KeyError:
        raise UnknownFamilyError(
            "unknown family %r (known: %s)" % (name, ", ".join(family_names()))
        ) from None
    return builder(*params)


def _check_family_order(n):
    if n < 1:
        raise ValueError("order must be positive")
    if n > SIZE_CAP:
        raise SizeCapError("order %d exceeds cap %d" % (n, SIZE_CAP))
