"""Congruence relations, quotients and the minimum quotient.

An equivalence relation is a congruence when related positions have the same
set of option classes. The maximum congruence is found by interning every
position as the hereditarily finite set of its options; the quotient by it is
the unique simple quotient.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import BudgetExceeded, NotACongruence, NotRefinement
from .graph import Gamegraph, Rulegraph
from .hfset import canonicalize
from .morphism import PositionMap, Verdict, are_isomorphic
from .partition import Partition

__all__ = [
    "Quotient",
    "CongruenceLattice",
    "is_congruence",
    "quotient",
    "max_congruence",
    "min_quotient",
    "is_simple",
    "emulationally_equivalent",
    "meet",
    "join",
    "con_lattice",
    "iter_congruences",
    "pushforward_congruence",
    "greedy_min_quotient",
    "DEFAULT_LATTICE_BUDGET",
]

DEFAULT_LATTICE_BUDGET = 10


class Quotient(NamedTuple):
    graph: Rulegraph
    partition: Partition
    projection: PositionMap


def _check_size(r: Rulegraph, pi: Partition) -> None:
    if pi.n != r.n:
        raise ValueError(f"partition covers {pi.n} positions, graph has {r.n}")


def is_congruence(r: Rulegraph, pi: Partition) -> Verdict:
    """Check ``p ~ q  =>  [Opt(p)] == [Opt(q)]``; witness is an offending pair."""
    _check_size(r, pi)
    b = pi.block_of
    for block in pi.blocks:
        first = block[0]
        want = {b[x] for x in r.options[first]}
        for q in block[1:]:
            got = {b[x] for x in r.options[q]}
            if got != want:
                return Verdict(False, {
                    "pair": [r.labels[first], r.labels[q]],
                    "option_classes": [
                        sorted(sorted(r.labels[y] for y in pi.blocks[k]) for k in want),
                        sorted(sorted(r.labels[y] for y in pi.blocks[k]) for k in got),
                    ],
                })
    return Verdict(True)


def _block_labels(r: Rulegraph, pi: Partition) -> list[str]:
    labels = ["{" + ",".join(r.labels[p] for p in block) + "}" for block in pi.blocks]
    if len(set(labels)) != len(labels):
        labels = [f"[{i}]" for i in range(len(labels))]
    return labels


def quotient(r: Rulegraph, pi: Partition, labels: list[str] | None = None) -> Quotient:
    """Quotient rulegraph ``R/pi`` and the projection ``p -> [p]``.

    Blocks are numbered by their smallest member; block labels list the
    member labels in braces. A gamegraph quotient is a gamegraph.
    """
    v = is_congruence(r, pi)
    if not v:
        a, b = v.witness["pair"]
        raise NotACongruence(f"{a!r} and {b!r} are related but have different option classes")
    b = pi.block_of
    options = [{b[q] for q in r.options[block[0]]} for block in pi.blocks]
    if labels is None:
        labels = _block_labels(r, pi)
    cls = Gamegraph if isinstance(r, Gamegraph) else Rulegraph
    graph = cls(labels, options)
    return Quotient(graph, pi, PositionMap(r, graph, b))


def max_congruence(r: Rulegraph) -> Partition:
    """The maximum congruence: positions with equal canonical sets."""
    return Partition([h.uid for h in canonicalize(r)])


def min_quotient(r: Rulegraph) -> Quotient:
    return quotient(r, max_congruence(r))


def is_simple(r: Rulegraph) -> Verdict:
    """Simple iff no two positions share an option set."""
    seen: dict[tuple[int, ...], int] = {}
    for p in r.positions():
        q = seen.setdefault(r.options[p], p)
        if q != p:
            return Verdict(False, {"pair": [r.labels[q], r.labels[p]], "options": sorted(r.labels[x] for x in r.options[p])})
    return Verdict(True)


def emulationally_equivalent(r: Rulegraph, s: Rulegraph) -> Verdict:
    v = are_isomorphic(min_quotient(r).graph, min_quotient(s).graph)
    if v:
        return v
    return Verdict(False, {"reason": "minimum quotients are not isomorphic", "detail": v.witness})


def meet(r: Rulegraph, a: Partition, b: Partition) -> Partition:
    """Common refinement (intersection of the relations)."""
    _check_size(r, a)
    _check_size(r, b)
    return Partition(list(zip(a.block_of, b.block_of)))


def join(r: Rulegraph, *parts: Partition) -> Partition:
    """Equivalence closure of the union of the given relations."""
    parent = list(range(r.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pi in parts:
        _check_size(r, pi)
        for block in pi.blocks:
            root = find(block[0])
            for p in block[1:]:
                other = find(p)
                if other != root:
                    parent[other] = root
    return Partition([find(p) for p in range(r.n)])


def _set_partitions(items: tuple[int, ...]) -> Iterator[list[int]]:
    """Restricted growth strings: every set partition of ``items`` once."""
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield list(rgs)
            return
        for v in range(top + 2):
            rgs[i] = v
            yield from rec(i + 1, max(top, v))

    rgs[0] = 0
    yield from rec(1, 0)


def iter_congruences(r: Rulegraph, budget: int = DEFAULT_LATTICE_BUDGET) -> Iterator[Partition]:
    """Every congruence of ``r``.

    Candidates are the partitions refining the maximum congruence, which
    already excludes relating a position to one of its subpositions.
    """
    if r.n > budget:
        raise BudgetExceeded(f"{r.n} positions exceed the congruence lattice budget {budget}")
    top = max_congruence(r)
    blocks = top.blocks
    per_block = [list(_set_partitions(block)) for block in blocks]
    for choice in itertools.product(*per_block):
        ids = [None] * r.n
        for k, (block, rgs) in enumerate(zip(blocks, choice)):
            for p, v in zip(block, rgs):
                ids[p] = (k, v)
        pi = Partition(ids)
        if is_congruence(r, pi):
            yield pi


@dataclass(frozen=True)
class CongruenceLattice:
    graph: Rulegraph
    elements: tuple[Partition, ...]
    bottom: Partition
    top: Partition

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, pi: object) -> bool:
        return pi in self.elements

    def index(self, pi: Partition) -> int:
        return self.elements.index(pi)

    def leq(self, a: Partition, b: Partition) -> bool:
        return a.refines(b)

    def meet(self, a: Partition, b: Partition) -> Partition:
        return meet(self.graph, a, b)

    def join(self, a: Partition, b: Partition) -> Partition:
        return join(self.graph, a, b)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(lower, upper)`` as element indices."""
        els = self.elements
        below = {(i, j) for i, a in enumerate(els) for j, b in enumerate(els) if i != j and a.refines(b)}
        return sorted(
            (i, j) for i, j in below
            if not any((i, k) in below and (k, j) in below for k in range(len(els)))
        )

    def notations(self) -> list[str]:
        return [pi.notation(self.graph) for pi in self.elements]


def con_lattice(r: Rulegraph, budget: int = DEFAULT_LATTICE_BUDGET) -> CongruenceLattice:
    elements = sorted(iter_congruences(r, budget), key=lambda pi: (-pi.block_count, pi.block_of))
    return CongruenceLattice(r, tuple(elements), Partition.discrete(r.n), max_congruence(r))


def pushforward_congruence(r: Rulegraph, d: Partition, c: Partition) -> Partition:
    """The partition ``C/D`` of the positions of ``R/D`` (ids follow :func:`quotient`)."""
    _check_size(r, d)
    _check_size(r, c)
    if not d.refines(c):
        raise NotRefinement("D must refine C")
    for name, pi in (("D", d), ("C", c)):
        if not is_congruence(r, pi):
            raise NotACongruence(f"{name} is not a congruence")
    return Partition([c.block_of[block[0]] for block in d.blocks])


def greedy_min_quotient(r: Rulegraph, rng: random.Random | None = None) -> Rulegraph:
    """Repeatedly merge one random pair of positions with equal option sets.

    Stops when the graph is simple. Whatever order the merges happen in, the
    result is isomorphic to the minimum quotient.
    """
    rng = rng or random.Random()
    g = r
    while True:
        groups: dict[tuple[int, ...], list[int]] = {}
        for p in g.positions():
            groups.setdefault(g.options[p], []).append(p)
        pairs = [grp for grp in groups.values() if len(grp) > 1]
        if not pairs:
            return g
        p, q = rng.sample(rng.choice(pairs), 2)
        g = quotient(g, Partition.from_blocks(g.n, [[p, q]])).graph
