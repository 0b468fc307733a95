"""Structural classification of the semigroup generated by a Cayley machine.

Everything is decided from the multiplication table of S alone, through
characterizations of the generated semigroup C(S):

  * C(S) is trivial iff it is a group iff S is an inflation of a right zero
    semigroup by null classes,
  * C(S) is finite iff S is H-trivial,
  * C(S) is free iff the minimal ideal K of S is a single R-class, every
    H-class inside K is non-singleton, and some k in K satisfies
    s*k*t = s*t for all s, t; the rank is then the size of an H-class of K,
  * C(S) is a right zero semigroup iff a*b*c = a*c for all a, b, c,
  * C(S) is a left zero semigroup iff the products S*S fill the minimal
    ideal and that ideal is a right zero semigroup.

The engine module rechecks these answers by brute enumeration in the test
suite and in the verify command; the two routes are kept independent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MulTable
from .engine import BehaviorGraph, WorkCapError, equal
from .green import green_relations, inflation_of_right_zero


@dataclass(frozen=True)
class ClassificationReport:
    """Answers about C(S), with witnesses as plain data (0-based indices)."""

    is_trivial: bool
    is_group: bool
    is_finite: bool
    is_free: bool
    free_rank: int | None
    is_left_zero: bool
    is_right_zero: bool
    witnesses: dict
    notes: str


def classify(S: MulTable) -> ClassificationReport:
    rows = S.rows
    n = S.order
    green = green_relations(S)
    witnesses: dict = {"minimal_ideal": green.minimal_ideal}
    notes = []

    inflation, inflation_witness = inflation_of_right_zero(S)
    if inflation_witness is not None:
        witnesses["inflation"] = {
            "targets": inflation_witness.targets,
            "classes": inflation_witness.classes,
        }

    finite = max(green.h_class) + 1 == n

    kernel = green.minimal_ideal
    kernel_set = set(kernel)
    free_rank = None
    single_r = len({green.r_class[a] for a in kernel}) == 1
    h_sizes = [len(green.h_class_of(a)) for a in kernel]
    connector = None
    if single_r and all(size > 1 for size in h_sizes):
        for k in kernel:
            if all(
                rows[rows[s][k]][t] == rows[s][t] for s in range(n) for t in range(n)
            ):
                connector = k
                break
    is_free = connector is not None
    if is_free:
        free_rank = len(green.h_class_of(kernel[0]))
        witnesses["free"] = {
            "connector": connector,
            "h_class": green.h_class_of(kernel[0]),
        }

    is_right_zero = all(
        rows[rows[a][b]][c] == rows[a][c]
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )

    squares = {rows[a][b] for a in range(n) for b in range(n)}
    is_left_zero = squares == kernel_set and all(
        rows[a][b] == b for a in kernel for b in kernel
    )

    if not finite:
        h_class, stabilizer = infinite_witness(S)
        witnesses["infinite"] = {"h_class": h_class, "stabilizer": stabilizer}

    if len(kernel) == 1:
        notes.append(
            "minimal ideal is a single idempotent; subset_shape reports"
            " singletons as right_zero by convention"
        )
    if inflation:
        notes.append(
            "trivial: the single element counts as a group and as a left and"
            " right zero semigroup at once"
        )

    return ClassificationReport(
        is_trivial=inflation,
        is_group=inflation,
        is_finite=finite,
        is_free=is_free,
        free_rank=free_rank,
        is_left_zero=is_left_zero,
        is_right_zero=is_right_zero,
        witnesses=witnesses,
        notes="; ".join(notes),
    )


def infinite_witness(S: MulTable):
    """A non-singleton H-class H and the elements t with t*H inside H.

    Returns (h_class, stabilizer) for the first non-singleton H-class in
    element order, or None when S is H-trivial.  When C(S) is infinite the
    one-letter machines of stabilizer elements are where a free pair of
    transformations is found.
    """
    green = green_relations(S)
    rows = S.rows
    n = S.order
    for a in range(n):
        h_class = green.h_class_of(a)
        if len(h_class) > 1:
            inside = set(h_class)
            stabilizer = tuple(
                t for t in range(n) if all(rows[t][h] in inside for h in h_class)
            )
            return h_class, stabilizer
    return None


def free_pair_check(
    S: MulTable, u: int, v: int, max_len: int = 4, work_cap: int = 1 << 20
) -> bool:
    """Check that the transformations of u and v satisfy no relation among
    words of length up to max_len, i.e. all 2**l words of each length l
    name distinct transformations and no two lengths collide.

    The two generators must already be distinct as transformations (raises
    ValueError otherwise).  True is evidence of freeness up to the window,
    not a proof; False exhibits a genuine relation.
    """
    n = S.order
    for g in (u, v):
        if not 0 <= g < n:
            raise ValueError("element %d out of range" % g)
    if 2 ** (max_len + 1) > work_cap:
        raise WorkCapError(
            "%d words exceed the work cap %d" % (2 ** (max_len + 1), work_cap)
        )
    if u == v or equal(S, (u,), (v,)):
        raise ValueError("the two generators coincide as transformations")
    graph = BehaviorGraph(S)
    level = [graph.generator_state[u], graph.generator_state[v]]
    seen = set(level)
    assert len(seen) == 2
    for _ in range(max_len - 1):
        seeds = [(st, g) for st in level for g in (u, v)]
        level = graph.extend(seeds)
        fresh = set(level)
        if len(fresh) < len(level) or fresh & seen:
            return False
        seen |= fresh
    return True


def report_to_json(report: ClassificationReport) -> dict:
    """JSON-ready dict with 1-based element indices throughout."""

    def shift(seq):
        return [x + 1 for x in seq]

    witnesses: dict = {}
    for key, value in report.witnesses.items():
        if key == "minimal_ideal":
            witnesses[key] = shift(value)
        elif key == "inflation":
            witnesses[key] = {
                "targets": shift(value["targets"]),
                "classes": [shift(c) for c in value["classes"]],
            }
        elif key == "free":
            witnesses[key] = {
                "connector": value["connector"] + 1,
                "h_class": shift(value["h_class"]),
            }
        elif key == "infinite":
            witnesses[key] = {
                "h_class": shift(value["h_class"]),
                "stabilizer": shift(value["stabilizer"]),
            }
        else:
            witnesses[key] = value
    return {
        "is_trivial": report.is_trivial,
        "is_group": report.is_group,
        "is_finite": report.is_finite,
        "is_free": report.is_free,
        "free_rank": report.free_rank,
        "is_left_zero": report.is_left_zero,
        "is_right_zero": report.is_right_zero,
        "witnesses": witnesses,
        "notes": report.notes,
    }
