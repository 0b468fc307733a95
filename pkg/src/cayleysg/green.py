"""Green's relations, the minimal ideal, and shape tests for subsets.

All computations go through principal ideals of the table: aS^1, S^1a and
S^1aS^1 as frozensets.  For finite semigroups the D relation coincides with
the two-sided ideal relation J, which is what is computed here; tests check
it against the join of R and L independently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import MulTable, SizeCapError

# brute_force_inflation searches all partitions; keep it tiny.
BRUTE_FORCE_CAP = 6


class NotClosedError(ValueError):
    """The subset is not closed under the product; ``pair`` is a witness."""

    def __init__(self, pair, product):
        self.pair = pair
        self.product = product
        a, b = pair
        super().__init__(
            "subset not closed: %d * %d = %d lies outside (1-based)"
            % (a + 1, b + 1, product + 1)
        )


@dataclass(frozen=True)
class GreenData:
    """Per-element class ids (numbered by first occurrence) plus the
    D-class structure: members, the ideal-containment order, the minimal
    ideal and the idempotents."""

    r_class: tuple[int, ...]
    l_class: tuple[int, ...]
    h_class: tuple[int, ...]
    d_class: tuple[int, ...]
    d_classes: tuple[tuple[int, ...], ...]
    d_below: tuple[tuple[bool, ...], ...]
    minimal_ideal: tuple[int, ...]
    idempotents: tuple[int, ...]

    def h_class_of(self, a: int) -> tuple[int, ...]:
        mine = self.h_class[a]
        return tuple(x for x, h in enumerate(self.h_class) if h == mine)


def _number(keys):
    ids: dict = {}
    return tuple(ids.setdefault(k, len(ids)) for k in keys)


def green_relations(S: MulTable) -> GreenData:
    rows = S.rows
    n = S.order
    right = [frozenset({a}.union(rows[a])) for a in range(n)]
    left = [frozenset({a}.union(rows[x][a] for x in range(n))) for a in range(n)]
    two_sided = [
        frozenset(
            itertools.chain(
                right[a], left[a], (rows[rows[x][a]][y] for x in range(n) for y in range(n))
            )
        )
        for a in range(n)
    ]

    r_class = _number(right)
    l_class = _number(left)
    h_class = _number(tuple(zip(r_class, l_class)))
    d_class = _number(two_sided)

    k = max(d_class) + 1
    members: list[list[int]] = [[] for _ in range(k)]
    for a, c in enumerate(d_class):
        members[c].append(a)
    d_classes = tuple(tuple(m) for m in members)
    reps = [m[0] for m in members]
    d_below = tuple(
        tuple(two_sided[reps[i]] <= two_sided[reps[j]] for j in range(k))
        for i in range(k)
    )

    # The product of all elements lies in every two-sided ideal, so its own
    # principal ideal is the minimal ideal.
    z = 0
    for a in range(1, n):
        z = rows[z][a]
    minimal_ideal = tuple(sorted(two_sided[z]))
    assert minimal_ideal == d_classes[d_class[z]]

    idempotents = tuple(a for a in range(n) if rows[a][a] == a)
    return GreenData(
        r_class,
        l_class,
        h_class,
        d_class,
        d_classes,
        d_below,
        minimal_ideal,
        idempotents,
    )


def is_h_trivial(S: MulTable) -> bool:
    """True iff every H-class is a singleton."""
    return max(green_relations(S).h_class) + 1 == S.order


def _as_subset(S, subset):
    members = sorted(set(subset))
    if not members:
        raise ValueError("empty subset")
    for a in members:
        if not 0 <= a < S.order:
            raise ValueError("element %d out of range" % a)
    return members


def subset_shape(S: MulTable, subset) -> str:
    """Classify a product-closed subset of S.

    Returns one of 'group', 'left_zero', 'right_zero', 'null',
    'rectangular_band' or 'other', testing the most specific shape first.
    A singleton subsemigroup fits every shape at once and is reported as
    'right_zero' by convention.  Raises NotClosedError when some product
    leaves the subset.
    """
    members = _as_subset(S, subset)
    rows = S.rows
    inside = set(members)
    for a in members:
        for b in members:
            if rows[a][b] not in inside:
                raise NotClosedError((a, b), rows[a][b])

    if len(members) == 1:
        return "right_zero"
    if group_identity(rows, members) is not None:
        return "group"
    if all(rows[a][b] == a for a in members for b in members):
        return "left_zero"
    if all(rows[a][b] == b for a in members for b in members):
        return "right_zero"
    products = {rows[a][b] for a in members for b in members}
    if len(products) == 1:
        return "null"
    if all(
        rows[a][a] == a and rows[rows[a][b]][a] == a for a in members for b in members
    ):
        return "rectangular_band"
    return "other"


def group_identity(rows, members):
    """The identity of (members, *) if that subsemigroup is a group."""
    identity = None
    for e in members:
        if all(rows[e][x] == x and rows[x][e] == x for x in members):
            identity = e
            break
    if identity is None:
        return None
    for x in members:
        if not any(
            rows[x][y] == identity and rows[y][x] == identity for y in members
        ):
            return None
    return identity


@dataclass(frozen=True)
class InflationWitness:
    """A partition of the elements over a right zero set of targets.

    classes[i] lists the elements retracting onto targets[i]; each target
    belongs to its own class, and every product a*b equals the target of b.
    """

    targets: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]


def inflation_of_right_zero(S: MulTable):
    """Decide whether S is a right zero semigroup inflated by null classes.

    Equivalent closed form: all rows of the table coincide (products depend
    only on the right factor, via a map phi) and phi is idempotent.  Returns
    (flag, InflationWitness or None).
    """
    rows = S.rows
    n = S.order
    phi = rows[0]
    for a in range(1, n):
        if rows[a] != phi:
            return False, None
    for b in range(n):
        if phi[phi[b]] != phi[b]:
            return False, None
    targets = tuple(sorted(set(phi)))
    classes = tuple(
        tuple(b for b in range(n) if phi[b] == t) for t in targets
    )
    return True, InflationWitness(targets, classes)


def brute_force_inflation(S: MulTable) -> bool:
    """Search directly for a right zero subsemigroup T and an assignment of
    every element to a class over T such that each product a*b lands on the
    target of b.  Independent of inflation_of_right_zero; order above
    BRUTE_FORCE_CAP raises SizeCapError.
    """
    n = S.order
    if n > BRUTE_FORCE_CAP:
        raise SizeCapError("order %d exceeds cap %d" % (n, BRUTE_FORCE_CAP))
    rows = S.rows
    elements = range(n)
    for size in range(1, n + 1):
        for targets in itertools.combinations(elements, size):
            if any(rows[a][b] != b for a in targets for b in targets):
                continue
            rest = [b for b in elements if b not in targets]
            for assigned in itertools.product(targets, repeat=len(rest)):
                phi = {t: t for t in targets}
                phi.update(zip(rest, assigned))
                if all(rows[a][b] == phi[b] for a in elements for b in elements):
                    return True
    return False
