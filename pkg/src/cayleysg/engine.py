"""Exact computation with the transformations generated by a Cayley machine.

A word w = (a_1, ..., a_k) over the elements of S names the transformation
of infinite strings obtained by running the Cayley machine from state a_1,
then feeding its output through the machine started at a_2, and so on.  Two
different words often name the same transformation; everything here decides
such questions exactly:

  * first_letter_action(w) is the permutation-free picture of what w does
    to the first input letter (a left translation of S),
  * section(w, x) is the word that continues the computation after the
    first letter x, and act(w, p) applies w to a finite prefix p,
  * equal, canonicalize and AutElement compare transformations exactly by
    minimizing the corresponding machines,
  * enumerate_semigroup closes the one-letter machines under composition
    and either returns the whole generated semigroup or reports that it
    passed a budget.

The closure machinery never stores one machine per word.  It grows a single
minimized behavior graph whose states are the distinct transformations seen
so far; appending a letter h to a behavior c is machine composition, so the
result depends only on the pair (c, h).  State ids are stable as the graph
grows, which lets callers accumulate sets of behaviors across rounds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MulTable, left_translation, LeftTranslation

DEFAULT_BUDGET = 10_000
CLOSURE_CAP = 10_000
STATE_CAP = 500_000
WORK_CAP = 200_000


class ClosureCapError(ValueError):
    """Tuple closure grew past the cap; the orbit is likely infinite."""

    def __init__(self, count):
        self.count = count
        super().__init__("section closure exceeded %d words" % count)


class StateCapError(ValueError):
    """The behavior graph grew past its state cap."""

    def __init__(self, count):
        self.count = count
        super().__init__("behavior graph exceeded %d states" % count)


class WorkCapError(ValueError):
    """The requested sweep is larger than the configured work cap."""


def _check_word(S, word):
    word = tuple(word)
    if not word:
        raise ValueError("empty word")
    for a in word:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < S.order:
            raise ValueError("letter %r out of range 0..%d" % (a, S.order - 1))
    return word


def _first_letter_multiplier(S, word):
    # w sends the first input letter x to (a_k * ... * a_1) * x.
    p = word[0]
    for a in word[1:]:
        p = S.rows[a][p]
    return p


def first_letter_action(S: MulTable, word) -> LeftTranslation:
    """The map induced by the word on the first letter of the input."""
    word = _check_word(S, word)
    return left_translation(S, _first_letter_multiplier(S, word))


def section(S: MulTable, word, x: int):
    """The word that continues the computation after the first letter x.

    Its entries are the running products a_i * ... * a_1 * x, so sections
    preserve word length.
    """
    word = _check_word(S, word)
    if not 0 <= x < S.order:
        raise ValueError("letter %d out of range" % x)
    rows = S.rows
    out = []
    c = x
    for a in word:
        c = rows[a][c]
        out.append(c)
    return tuple(out)


def act(S: MulTable, word, prefix):
    """Apply the transformation named by the word to a finite prefix."""
    word = _check_word(S, word)
    prefix = tuple(prefix)
    rows = S.rows
    out = []
    for x in prefix:
        if not 0 <= x < S.order:
            raise ValueError("letter %r out of range" % (x,))
        out.append(rows[_first_letter_multiplier(S, word)][x])
        word = section(S, word, x)
    return tuple(out)


def equal(S: MulTable, u, v) -> bool:
    """Exact equality of the transformations named by two words.

    Coinductive check on pairs of residual words: a pair passes if the two
    first letter actions agree and every pair of sections passes, assuming
    equality on revisited pairs.  Terminates because sections preserve word
    length.  Independent of canonicalize; the two are cross-checked in the
    test suite.
    """
    u = _check_word(S, u)
    v = _check_word(S, v)
    rows = S.rows
    n = S.order
    seen = set()
    stack = [(u, v)]
    while stack:
        a, b = stack.pop()
        if (a, b) in seen:
            continue
        seen.add((a, b))
        if rows[_first_letter_multiplier(S, a)] != rows[_first_letter_multiplier(S, b)]:
            return False
        for x in range(n):
            stack.append((section(S, a, x), section(S, b, x)))
    return True


@dataclass(frozen=True)
class AutElement:
    """A transformation of infinite strings as a minimal pointed machine.

    The machine is canonically numbered (breadth-first from the initial
    state, letters in increasing order), so two AutElements are equal as
    values exactly when they are equal as transformations; the initial
    state is always 0 after canonical numbering.
    """

    letters: int
    transition: tuple[tuple[int, ...], ...]
    output: tuple[tuple[int, ...], ...]
    initial: int = 0

    @property
    def n_states(self) -> int:
        return len(self.transition)

    def serialize(self) -> bytes:
        """Canonical bytes: counts, both tables row-major, initial state."""
        flat = [self.n_states, self.letters]
        for row in self.transition:
            flat.extend(row)
        for row in self.output:
            flat.extend(row)
        flat.append(self.initial)
        return ",".join(map(str, flat)).encode("ascii")

    def apply(self, prefix):
        """Run the machine over a finite prefix (cross-check against act)."""
        s = self.initial
        out = []
        for x in prefix:
            out.append(self.output[s][x])
            s = self.transition[s][x]
        return tuple(out)


def _refine(out_rows, nxt_rows):
    """Classes of machine states under behavioral equivalence.

    Moore refinement: start from the partition by output rows, split by
    successor classes until stable.  Returns per-state class ids numbered
    by first occurrence in state order, so the result does not depend on
    numpy's internal sort order.
    """
    m = len(out_rows)
    first: dict = {}
    cls = np.empty(m, dtype=np.int64)
    for s, row in enumerate(out_rows):
        cls[s] = first.setdefault(row, len(first))
    nxt = np.array(nxt_rows, dtype=np.int64)
    count = len(first)
    while True:
        sig = np.concatenate([cls[:, None], cls[nxt]], axis=1)
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new_count = int(new.max()) + 1
        cls = new
        if new_count == count:
            break
        count = new_count
    renumber: dict = {}
    return [renumber.setdefault(int(c), len(renumber)) for c in cls]


def _pointed_machine(out_rows, nxt_rows, start, letters):
    """The reachable part from start, renumbered breadth-first.

    The input states must be pairwise inequivalent (already minimized);
    the result is then the canonical form of the pointed machine.
    """
    order = [start]
    index = {start: 0}
    for s in order:
        for x in range(letters):
            t = nxt_rows[s][x]
            if t not in index:
                index[t] = len(order)
                order.append(t)
    transition = tuple(
        tuple(index[nxt_rows[s][x]] for x in range(letters)) for s in order
    )
    output = tuple(tuple(out_rows[s]) for s in order)
    return AutElement(letters, transition, output)


def canonicalize(S: MulTable, word, closure_cap: int = CLOSURE_CAP) -> AutElement:
    """The minimal pointed machine of the transformation named by the word.

    Collects the words reachable from the input via sections, minimizes and
    extracts the reachable quotient.  If more than closure_cap distinct
    residual words appear, raises ClosureCapError (the orbit is suspected
    infinite; fall back to equal() for pairwise questions).
    """
    word = _check_word(S, word)
    rows = S.rows
    n = S.order
    index = {word: 0}
    order = [word]
    out_rows = []
    nxt_rows = []
    for w in order:
        out_rows.append(rows[_first_letter_multiplier(S, w)])
        nxt = []
        for x in range(n):
            s = section(S, w, x)
            if s not in index:
                if len(order) >= closure_cap:
                    raise ClosureCapError(len(order))
                index[s] = len(order)
                order.append(s)
            nxt.append(index[s])
        nxt_rows.append(tuple(nxt))
    cls = _refine(out_rows, nxt_rows)
    k = max(cls) + 1
    qout = [None] * k
    qnxt = [None] * k
    for s in range(len(order)):
        c = cls[s]
        if qout[c] is None:
            qout[c] = out_rows[s]
            qnxt[c] = tuple(cls[t] for t in nxt_rows[s])
    return _pointed_machine(qout, qnxt, cls[0], n)


class BehaviorGraph:
    """A growing minimized machine holding every behavior seen so far.

    States are pairwise distinct transformations.  extend() composes
    existing behaviors with one-letter machines and merges the results in,
    minimizing globally; established state ids never change because
    established states are pairwise inequivalent and the class numbering
    follows first occurrence.
    """

    def __init__(self, S: MulTable, state_cap: int = STATE_CAP):
        self.S = S
        self.rows = S.rows
        self.n = S.order
        self.state_cap = state_cap
        cls = _refine(S.rows, S.rows)
        self.out: list[tuple[int, ...]] = []
        self.nxt: list[tuple[int, ...]] = []
        for s in range(self.n):
            if cls[s] == len(self.out):
                self.out.append(tuple(S.rows[s]))
                self.nxt.append(tuple(cls[t] for t in S.rows[s]))
        # behavior of the one-letter word (g,) for each element g
        self.generator_state = tuple(cls)

    def __len__(self):
        return len(self.out)

    def extend(self, seeds):
        """Compose behaviors with one-letter machines and absorb the results.

        seeds is a sequence of (state, element) pairs; the return value
        gives, for each seed in order, the state id of the transformation
        'seed behavior followed by the machine of element'.
        """
        rows = self.rows
        n = self.n
        base = len(self.out)

        pair_index: dict = {}
        pair_list: list = []

        def pair_id(c, h):
            pid = pair_index.get((c, h))
            if pid is None:
                pid = len(pair_list)
                pair_index[(c, h)] = pid
                pair_list.append((c, h))
            return pid

        for c, h in seeds:
            pair_id(c, h)
        pair_out = []
        pair_nxt = []
        i = 0
        while i < len(pair_list):
            c, h = pair_list[i]
            i += 1
            row_h = rows[h]
            orow = tuple(row_h[y] for y in self.out[c])
            cnxt = self.nxt[c]
            pair_out.append(orow)
            pair_nxt.append(
                tuple(base + pair_id(cnxt[x], orow[x]) for x in range(n))
            )
            if base + len(pair_list) > self.state_cap:
                raise StateCapError(base + len(pair_list))

        cls = _refine(self.out + pair_out, self.nxt + pair_nxt)
        for s in range(base):
            assert cls[s] == s  # established behaviors are pairwise distinct
        for j in range(len(pair_list)):
            c = cls[base + j]
            if c >= len(self.out):
                assert c == len(self.out)  # fresh classes appear in id order
                self.out.append(pair_out[j])
                self.nxt.append(tuple(cls[t] for t in pair_nxt[j]))
        return [cls[base + pair_index[(c, h)]] for c, h in seeds]

    def element(self, state: int) -> AutElement:
        """The canonical machine of the behavior at the given state."""
        return _pointed_machine(self.out, self.nxt, state, self.n)


@dataclass(frozen=True)
class Closed:
    """The generated semigroup is finite and fully enumerated.

    elements[i] is the i-th distinct transformation (in discovery order),
    cayley is its multiplication table and generator_map sends each element
    of S to the index of its one-letter transformation.
    """

    elements: tuple[AutElement, ...]
    cayley: tuple[tuple[int, ...], ...]
    generator_map: tuple[int, ...]


@dataclass(frozen=True)
class Exceeded:
    """Enumeration stopped after seeing more than budget distinct elements
    (or, with capped=True, after hitting the internal state cap)."""

    count_reached: int
    capped: bool = False


EnumerationResult = Closed | Exceeded


def enumerate_semigroup(
    S: MulTable, budget: int = DEFAULT_BUDGET, state_cap: int = STATE_CAP
) -> EnumerationResult:
    """Close the one-letter machines of S under composition.

    Breadth-first on word length: every element found at the previous depth
    is extended by every generator, recording products as they appear.  The
    run is Closed when a depth adds nothing new, and Exceeded as soon as
    more than budget distinct transformations exist.
    """
    n = S.order
    if budget < n:
        raise ValueError("budget %d below the number of generators %d" % (budget, n))
    graph = BehaviorGraph(S, state_cap)
    state_elem: dict = {}
    elem_state: list = []
    words: list = []
    generator_map = []
    frontier = []
    for g in range(n):
        st = graph.generator_state[g]
        e = state_elem.get(st)
        if e is None:
            e = len(elem_state)
            state_elem[st] = e
            elem_state.append(st)
            words.append((g,))
            frontier.append(e)
        generator_map.append(e)

    product: dict = {}
    try:
        while frontier:
            seeds = [(elem_state[e], g) for e in frontier for g in range(n)]
            results = graph.extend(seeds)
            fresh = []
            pos = 0
            for e in frontier:
                for g in range(n):
                    st = results[pos]
                    pos += 1
                    f = state_elem.get(st)
                    if f is None:
                        f = len(elem_state)
                        if f >= budget:
                            return Exceeded(f + 1)
                        state_elem[st] = f
                        elem_state.append(st)
                        words.append(words[e] + (g,))
                        fresh.append(f)
                    product[(e, g)] = f
            frontier = fresh
    except StateCapError:
        return Exceeded(len(elem_state), capped=True)

    count = len(elem_state)
    elements = tuple(graph.element(st) for st in elem_state)
    cayley = []
    for a in range(count):
        row = []
        for b in range(count):
            x = a
            for g in words[b]:
                x = product[(x, g)]
            row.append(x)
        cayley.append(tuple(row))
    return Closed(elements, tuple(cayley), tuple(generator_map))


def count_distinct_words(S: MulTable, max_len: int, work_cap: int = WORK_CAP) -> int:
    """How many distinct transformations the words of length 1..max_len name.

    The sweep is capped by the total number of words, sum of |S|**l for
    l = 1..max_len; raises WorkCapError above work_cap.
    """
    if max_len < 1:
        raise ValueError("max_len must be positive")
    n = S.order
    total = sum(n**length for length in range(1, max_len + 1))
    if total > work_cap:
        raise WorkCapError("%d words exceed the work cap %d" % (total, work_cap))
    graph = BehaviorGraph(S)
    active = sorted(set(graph.generator_state))
    seen = set(active)
    for _ in range(max_len - 1):
        seeds = [(st, g) for st in active for g in range(n)]
        active = sorted(set(graph.extend(seeds)))
        seen.update(active)
    return len(seen)
