"""Valuations: per-position values defined by ``f(p) = mu(f(Opt(p)))``.

Every built-in aggregator receives the *set* of option values, so duplicates
and ordering of options cannot influence the result. The terminal-labelled
outcome of the mouse-in-a-maze game is also here; it is not a valuation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Hashable, Mapping

from .errors import LabelMismatch
from .graph import Gamegraph, Rulegraph, terminals

__all__ = [
    "P",
    "N",
    "Aggregator",
    "ValuationResult",
    "mex",
    "MEX",
    "NORMAL",
    "MISERE",
    "BIRTHDAY",
    "MIN_DISTANCE",
    "BUILTIN",
    "evaluate",
    "nim_values",
    "outcome_normal",
    "outcome_misere",
    "formal_birthdays",
    "fbd",
    "min_distance_to_terminal",
    "outcome_with_terminal_labels",
]

P = "P"
N = "N"


@dataclass(frozen=True)
class Aggregator:
    name: str
    reduce: Callable[[frozenset], Hashable]

    def __call__(self, values: frozenset) -> Hashable:
        return self.reduce(values)


@dataclass(frozen=True)
class ValuationResult:
    values: tuple
    graph_value: Any = None

    def __getitem__(self, p: int):
        return self.values[p]

    def __len__(self) -> int:
        return len(self.values)


def mex(values: frozenset) -> int:
    m = 0
    while m in values:
        m += 1
    return m


def _normal(values: frozenset) -> str:
    return N if P in values else P


def _misere(values: frozenset) -> str:
    return N if (P in values or not values) else P


def _birthday(values: frozenset) -> int:
    return max((x + 1 for x in values), default=0)


def _min_distance(values: frozenset) -> int:
    return min((x + 1 for x in values), default=0)


MEX = Aggregator("nim", mex)
NORMAL = Aggregator("outcome+", _normal)
MISERE = Aggregator("outcome-", _misere)
BIRTHDAY = Aggregator("fbd", _birthday)
MIN_DISTANCE = Aggregator("mindist", _min_distance)

BUILTIN: dict[str, Aggregator] = {a.name: a for a in (MEX, NORMAL, MISERE, BIRTHDAY, MIN_DISTANCE)}


def evaluate(r: Rulegraph, mu: Aggregator | Callable[[frozenset], Hashable]) -> ValuationResult:
    """Evaluate the valuation of ``mu`` in one bottom-up sweep."""
    values: list = [None] * r.n
    for p in r.order:
        values[p] = mu(frozenset(values[q] for q in r.options[p]))
    start = values[r.start] if isinstance(r, Gamegraph) else None
    return ValuationResult(tuple(values), start)


def nim_values(r: Rulegraph) -> tuple[int, ...]:
    return evaluate(r, MEX).values


def outcome_normal(r: Rulegraph) -> tuple[str, ...]:
    return evaluate(r, NORMAL).values


def outcome_misere(r: Rulegraph) -> tuple[str, ...]:
    return evaluate(r, MISERE).values


def formal_birthdays(r: Rulegraph) -> tuple[int, ...]:
    return evaluate(r, BIRTHDAY).values


def fbd(r: Rulegraph) -> int:
    """Formal birthday of the whole rulegraph (0 for the empty one)."""
    return max(formal_birthdays(r), default=0)


def min_distance_to_terminal(r: Rulegraph) -> tuple[int, ...]:
    return evaluate(r, MIN_DISTANCE).values


def outcome_with_terminal_labels(g: Rulegraph, labeling: Mapping[int, str]) -> tuple[str, ...]:
    """Outcomes when each terminal carries its own fixed outcome.

    Non-terminal positions use the normal-play rule on their options.
    ``labeling`` maps terminal position ids to ``"P"`` or ``"N"`` and must
    cover exactly the terminals.
    """
    terms = terminals(g)
    keys = set(labeling)
    if keys != terms:
        missing = sorted(g.labels[t] for t in terms - keys)
        extra = sorted(str(k) if not isinstance(k, int) or not 0 <= k < g.n else g.labels[k] for k in keys - terms)
        raise LabelMismatch(f"terminal labels mismatch: missing {missing}, extra {extra}")
    values: list = [None] * g.n
    for p in g.order:
        if not g.options[p]:
            value = labeling[p]
            if value not in (P, N):
                raise LabelMismatch(f"outcome of {g.labels[p]!r} must be 'P' or 'N', got {value!r}")
            values[p] = value
        else:
            values[p] = _normal(frozenset(values[q] for q in g.options[p]))
    return tuple(values)
