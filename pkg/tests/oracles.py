"""Independent oracles used by the tests.

Everything here is written directly from definitions, on purpose not
sharing code with the package: naive associativity filtering, literal
machine runs for word semantics, mutual-membership Green relations and
closure-computed ideals.  Frozen constants in the tests were produced by
these oracles and are asserted against both routes.
"""

from __future__ import annotations

import itertools


def is_associative(rows):
    n = len(rows)
    return all(
        rows[rows[a][b]][c] == rows[a][rows[b][c]]
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )


def all_tables(n):
    """Every associative table of order n, by filtering all n**(n*n) grids."""
    found = []
    for flat in itertools.product(range(n), repeat=n * n):
        rows = tuple(flat[i * n : (i + 1) * n] for i in range(n))
        if is_associative(rows):
            found.append(rows)
    return found


def run_machine(rows, state, string):
    """One pass of the Cayley machine from the given state."""
    out = []
    for x in string:
        y = rows[state][x]
        out.append(y)
        state = y
    return tuple(out)


def word_apply(rows, word, string):
    """The word's transformation, computed literally: run the machine of
    the first letter, feed its output to the machine of the second, ..."""
    string = tuple(string)
    for a in word:
        string = run_machine(rows, a, string)
    return string


def mutual_membership_green(rows):
    """R, L, H, D classes from scratch.

    a R b iff each lies in the other's principal right ideal (membership,
    not set equality); D is the transitive closure of R union L, computed
    by union-find rather than by comparing two-sided ideals.
    """
    n = len(rows)
    right = [{a} | {rows[a][x] for x in range(n)} for a in range(n)]
    left = [{a} | {rows[x][a] for x in range(n)} for a in range(n)]

    def related(sets, a, b):
        return b in sets[a] and a in sets[b]

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    r_pairs = set()
    l_pairs = set()
    for a in range(n):
        for b in range(n):
            if related(right, a, b):
                r_pairs.add((a, b))
                union(a, b)
            if related(left, a, b):
                l_pairs.add((a, b))
                union(a, b)
    h_pairs = r_pairs & l_pairs
    d_pairs = {(a, b) for a in range(n) for b in range(n) if find(a) == find(b)}
    return r_pairs, l_pairs, h_pairs, d_pairs


def closure_ideal(rows, a):
    """The two-sided ideal generated by a, grown by closure."""
    n = len(rows)
    seen = {a}
    todo = [a]
    while todo:
        x = todo.pop()
        for y in range(n):
            for z in (rows[x][y], rows[y][x]):
                if z not in seen:
                    seen.add(z)
                    todo.append(z)
    return frozenset(seen)


def kernel(rows):
    """The minimal ideal as the intersection of all principal ideals."""
    ideals = [closure_ideal(rows, a) for a in range(len(rows))]
    return frozenset.intersection(*ideals)


def classes_to_pairs(ids):
    """Turn per-element class ids into the set of related pairs."""
    n = len(ids)
    return {(a, b) for a in range(n) for b in range(n) if ids[a] == ids[b]}
