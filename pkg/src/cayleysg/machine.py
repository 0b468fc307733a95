"""Mealy machines and the Cayley machine of a multiplication table."""

from __future__ import annotations

from dataclasses import dataclass

from .core import MulTable


@dataclass(frozen=True)
class MealyMachine:
    """A deterministic, complete, letter-to-letter transducer.

    transition[s][x] is the state entered and output[s][x] the letter
    emitted when reading x in state s.  Labels are display strings only.
    """

    transition: tuple[tuple[int, ...], ...]
    output: tuple[tuple[int, ...], ...]
    state_labels: tuple[str, ...] | None = None
    letter_labels: tuple[str, ...] | None = None

    @property
    def n_states(self) -> int:
        return len(self.transition)

    @property
    def n_letters(self) -> int:
        return len(self.transition[0]) if self.transition else 0

    def state_label(self, s: int) -> str:
        return self.state_labels[s] if self.state_labels is not None else str(s + 1)

    def letter_label(self, x: int) -> str:
        return self.letter_labels[x] if self.letter_labels is not None else str(x + 1)


def build_cayley_machine(S: MulTable) -> MealyMachine:
    """The machine whose states and letters are the elements of S: in state
    s reading x it outputs s*x and moves to state s*x."""
    return MealyMachine(S.rows, S.rows, S.names, S.names)


def _quote(label: str) -> str:
    return '"%s"' % label.replace("\\", "\\\\").replace('"', '\\"')


def machine_to_dot(M: MealyMachine) -> str:
    """Graphviz source for the machine; the text is byte-stable for equal
    machines (fixed declaration order, node ids s0..s{n-1})."""
    lines = ["digraph mealy {", "  rankdir=LR;", "  node [shape=circle];"]
    for s in range(M.n_states):
        lines.append("  s%d [label=%s];" % (s, _quote(M.state_label(s))))
    for s in range(M.n_states):
        for x in range(M.n_letters):
            label = "%s|%s" % (M.letter_label(x), M.letter_label(M.output[s][x]))
            lines.append(
                "  s%d -> s%d [label=%s];" % (s, M.transition[s][x], _quote(label))
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
