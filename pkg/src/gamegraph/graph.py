"""Finite rulegraphs and gamegraphs.

A rulegraph is a finite acyclic digraph whose vertices are game positions and
whose out-neighbours are the options of a position. A gamegraph additionally
has a unique source, the starting position. Positions are dense integer ids;
the human readable labels live in a side table.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .errors import (
    CycleDetected,
    DuplicateLabel,
    MultipleSources,
    NoSource,
    SelfLoop,
    UnknownEndpoint,
    UnknownPosition,
)

__all__ = [
    "Rulegraph",
    "Gamegraph",
    "new_rulegraph",
    "new_gamegraph",
    "as_gamegraph",
    "sources",
    "terminals",
    "subpositions",
    "induced_gamegraph",
    "gamma",
    "random_rulegraph",
    "random_gamegraph",
]


def _bottom_up_order(labels: Sequence[str], options: Sequence[tuple[int, ...]]) -> tuple[int, ...]:
    """Post-order DFS: every position appears after all of its options.

    Iterative so that long chains do not hit the recursion limit.
    Raises CycleDetected with the label sequence of one cycle.
    """
    n = len(options)
    state = [0] * n  # 0 unseen, 1 on stack, 2 finished
    order: list[int] = []
    for root in range(n):
        if state[root]:
            continue
        state[root] = 1
        stack = [[root, 0]]
        while stack:
            frame = stack[-1]
            v, i = frame
            opts = options[v]
            if i < len(opts):
                frame[1] = i + 1
                w = opts[i]
                if state[w] == 1:
                    path = [f[0] for f in stack]
                    cycle = path[path.index(w):] + [w]
                    raise CycleDetected([labels[p] for p in cycle])
                if state[w] == 0:
                    state[w] = 1
                    stack.append([w, 0])
            else:
                state[v] = 2
                order.append(v)
                stack.pop()
    return tuple(order)


class Rulegraph:
    """Immutable finite rulegraph.

    ``labels[p]`` is the label of position ``p`` and ``options[p]`` the sorted
    tuple of its options. Construction validates every invariant, so any
    instance is a genuine rulegraph.
    """

    __slots__ = ("labels", "options", "_index", "_order", "_preds")

    def __init__(self, labels: Iterable[object], options: Iterable[Iterable[int]]):
        labels = tuple(str(label) for label in labels)
        index: dict[str, int] = {}
        for i, label in enumerate(labels):
            if label in index:
                raise DuplicateLabel(label)
            index[label] = i
        opts = tuple(tuple(sorted(set(o))) for o in options)
        if len(opts) != len(labels):
            raise ValueError("labels and options must have the same length")
        n = len(labels)
        for p, o in enumerate(opts):
            for q in o:
                if not (isinstance(q, int) and 0 <= q < n):
                    raise UnknownEndpoint(str(q))
                if q == p:
                    raise SelfLoop(labels[p])
        self.labels = labels
        self.options = opts
        self._index = index
        self._order = _bottom_up_order(labels, opts)
        self._preds: tuple[tuple[int, ...], ...] | None = None

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def positions(self) -> range:
        return range(len(self.labels))

    def opt(self, p: int) -> tuple[int, ...]:
        return self.options[p]

    def label(self, p: int) -> str:
        return self.labels[p]

    def id_of(self, label: object) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise UnknownPosition(label) from None

    def check_position(self, p: int) -> int:
        if not (isinstance(p, int) and 0 <= p < len(self.labels)):
            raise UnknownPosition(p)
        return p

    @property
    def order(self) -> tuple[int, ...]:
        """Positions listed so that options always precede the position."""
        return self._order

    @property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        if self._preds is None:
            preds: list[list[int]] = [[] for _ in self.labels]
            for p, o in enumerate(self.options):
                for q in o:
                    preds[q].append(p)
            self._preds = tuple(tuple(x) for x in preds)
        return self._preds

    def arrows(self) -> list[tuple[int, int]]:
        return [(p, q) for p, o in enumerate(self.options) for q in o]

    @property
    def arrow_count(self) -> int:
        return sum(len(o) for o in self.options)

    def labeled_arrows(self) -> list[tuple[str, str]]:
        return [(self.labels[p], self.labels[q]) for p, q in self.arrows()]

    def as_rulegraph(self) -> Rulegraph:
        """Plain rulegraph view (drops a starting position, if any)."""
        if type(self) is Rulegraph:
            return self
        return Rulegraph(self.labels, self.options)

    def relabel(self, labels: Iterable[object]) -> Rulegraph:
        return Rulegraph(labels, self.options)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.labels == other.labels and self.options == other.options

    def __hash__(self) -> int:
        return hash((self.labels, self.options))

    def __repr__(self) -> str:
        return f"Rulegraph(n={self.n}, arrows={self.arrow_count})"


class Gamegraph(Rulegraph):
    """Rulegraph with a unique source, the starting position ``start``."""

    __slots__ = ("start",)

    def __init__(self, labels: Iterable[object], options: Iterable[Iterable[int]], start: int | None = None):
        super().__init__(labels, options)
        srcs = sources(self)
        if not srcs:
            raise NoSource("an empty graph has no starting position" if self.n == 0 else "graph has no source position")
        if len(srcs) > 1:
            raise MultipleSources([self.labels[s] for s in sorted(srcs)])
        (source,) = srcs
        if start is not None and start != source:
            self.check_position(start)
            raise NoSource(f"position {self.labels[start]!r} is not the unique source {self.labels[source]!r}")
        self.start = source

    def relabel(self, labels: Iterable[object]) -> Gamegraph:
        return Gamegraph(labels, self.options)

    def __eq__(self, other: object) -> bool:
        if type(other) is not Gamegraph:
            return NotImplemented
        return self.labels == other.labels and self.options == other.options and self.start == other.start

    def __hash__(self) -> int:
        return hash((self.labels, self.options, self.start))

    def __repr__(self) -> str:
        return f"Gamegraph(n={self.n}, arrows={self.arrow_count}, start={self.labels[self.start]!r})"


def _options_from_arrows(labels: Sequence[object], arrows: Iterable[tuple[object, object]]):
    labels = [str(x) for x in labels]
    index: dict[str, int] = {}
    for i, label in enumerate(labels):
        if label in index:
            raise DuplicateLabel(label)
        index[label] = i
    options: list[set[int]] = [set() for _ in labels]
    for a, b in arrows:
        a, b = str(a), str(b)
        if a not in index:
            raise UnknownEndpoint(a)
        if b not in index:
            raise UnknownEndpoint(b)
        if a == b:
            raise SelfLoop(a)
        options[index[a]].add(index[b])
    return labels, options


def new_rulegraph(labels: Sequence[object], arrows: Iterable[tuple[object, object]]) -> Rulegraph:
    """Validated rulegraph from labels and (from, to) label pairs.

    Ids follow the order of ``labels``; duplicate arrows are collapsed.
    """
    return Rulegraph(*_options_from_arrows(labels, arrows))


def new_gamegraph(labels: Sequence[object], arrows: Iterable[tuple[object, object]], start: object = None) -> Gamegraph:
    labels, options = _options_from_arrows(labels, arrows)
    g = Gamegraph(labels, options)
    if start is not None and g.labels[g.start] != str(start):
        if str(start) not in labels:
            raise UnknownPosition(start)
        raise NoSource(f"position {str(start)!r} is not the unique source {g.labels[g.start]!r}")
    return g


def as_gamegraph(r: Rulegraph) -> Gamegraph:
    """View a finite rulegraph with a unique source as a gamegraph.

    In the finite case every position is then reachable from the source, so
    no reachability check is needed.
    """
    if isinstance(r, Gamegraph):
        return r
    return Gamegraph(r.labels, r.options)


def sources(r: Rulegraph) -> set[int]:
    has_pred = [False] * r.n
    for o in r.options:
        for q in o:
            has_pred[q] = True
    return {p for p in r.positions() if not has_pred[p]}


def terminals(r: Rulegraph) -> set[int]:
    return {p for p in r.positions() if not r.options[p]}


def subpositions(r: Rulegraph, p: int) -> set[int]:
    """All positions reachable from ``p`` by a directed walk, ``p`` included."""
    r.check_position(p)
    seen = {p}
    stack = [p]
    while stack:
        for q in r.options[stack.pop()]:
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def induced_subgraph(r: Rulegraph, keep: Iterable[int]) -> tuple[Rulegraph, tuple[int, ...]]:
    """Subgraph induced by ``keep``; returns it with the old id of each new id."""
    old = tuple(sorted(set(keep)))
    new_id = {p: i for i, p in enumerate(old)}
    options = [[new_id[q] for q in r.options[p] if q in new_id] for p in old]
    return Rulegraph([r.labels[p] for p in old], options), old


def induced_gamegraph(r: Rulegraph, p: int) -> Gamegraph:
    """The gamegraph R_p on the subpositions of ``p``, started at ``p``."""
    sub, _ = induced_subgraph(r, subpositions(r, p))
    return Gamegraph(sub.labels, sub.options)


def gamma(r: Rulegraph) -> list[Gamegraph]:
    return [induced_gamegraph(r, p) for p in r.positions()]


def random_rulegraph(rng: random.Random, n: int, density: float = 0.35, labels: Sequence[str] | None = None) -> Rulegraph:
    """Random rulegraph on ``n`` positions with shuffled ids.

    Arrows go from later to earlier positions of a hidden random ranking, so
    the result is acyclic by construction; it still passes full validation.
    """
    rank = list(range(n))
    rng.shuffle(rank)
    options = [[q for q in range(n) if rank[q] < rank[p] and rng.random() < density] for p in range(n)]
    if labels is None:
        labels = [f"v{i}" for i in range(n)]
    return Rulegraph(labels, options)


def random_gamegraph(rng: random.Random, n: int, density: float = 0.35) -> Gamegraph:
    """Random gamegraph on ``n >= 1`` positions."""
    rank = list(range(n))
    rng.shuffle(rank)
    by_rank = sorted(range(n), key=rank.__getitem__)
    options: list[set[int]] = [set() for _ in range(n)]
    for i, p in enumerate(by_rank):
        for q in by_rank[:i]:
            if rng.random() < density:
                options[p].add(q)
    # every non-top position needs an in-neighbour so the top is the unique source
    for i, q in enumerate(by_rank[:-1]):
        higher = by_rank[i + 1:]
        if not any(q in options[p] for p in higher):
            options[rng.choice(higher)].add(q)
    return Gamegraph([f"g{i}" for i in range(n)], options)
