"""Interned hereditarily finite sets.

Replacing every position by the set of (the sets of) its options turns a
rulegraph into a collection of hereditarily finite sets. Two positions get
the same set exactly when the minimum quotient identifies them, so interning
these sets gives the minimum quotient, an isomorphism invariant and the
canonical objects used by the enumeration code.

Interning is scoped to an explicit :class:`HfArena`. Inside one arena equal
sets are the same object, so equality and hashing are by identity. Sets from
different arenas are never identical; compare them with :func:`hf_order` or
through :func:`notation`.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Iterable

from .errors import NotMembershipClosed, ParseError
from .graph import Rulegraph

__all__ = [
    "EMPTY_SYMBOL",
    "HfSet",
    "HfArena",
    "canonicalize",
    "hf_order",
    "notation",
    "collection_to_rulegraph",
    "transitive_closure",
]

EMPTY_SYMBOL = "∅"


class HfSet:
    """A hereditarily finite set owned by an arena.

    ``children`` are sorted by :func:`hf_order`. ``rank`` equals the formal
    birthday of the corresponding position.
    """

    __slots__ = ("children", "rank", "uid", "arena", "_text")

    def __init__(self, children: tuple[HfSet, ...], uid: int, arena: HfArena):
        self.children = children
        self.rank = 1 + max(c.rank for c in children) if children else 0
        self.uid = uid
        self.arena = arena
        self._text: str | None = None

    def __len__(self) -> int:
        return len(self.children)

    def __iter__(self):
        return iter(self.children)

    def __contains__(self, item: object) -> bool:
        return item in self.children

    def __lt__(self, other: HfSet) -> bool:
        return hf_order(self, other) < 0

    def __le__(self, other: HfSet) -> bool:
        return hf_order(self, other) <= 0

    def __gt__(self, other: HfSet) -> bool:
        return hf_order(self, other) > 0

    def __ge__(self, other: HfSet) -> bool:
        return hf_order(self, other) >= 0

    def __str__(self) -> str:
        return notation(self)

    def __repr__(self) -> str:
        return f"HfSet({notation(self)})"


class HfArena:
    """Intern table for :class:`HfSet` values. Single writer."""

    def __init__(self):
        self._table: dict[tuple[int, ...], HfSet] = {}
        self.empty = self.intern(())

    def __len__(self) -> int:
        return len(self._table)

    def intern(self, children: Iterable[HfSet]) -> HfSet:
        kids = set(children)
        for c in kids:
            if c.arena is not self:
                raise ValueError("cannot mix HfSets from different arenas")
        ordered = tuple(sorted(kids, key=_key))
        ident = tuple(c.uid for c in ordered)
        h = self._table.get(ident)
        if h is None:
            h = HfSet(ordered, len(self._table), self)
            self._table[ident] = h
        return h

    def parse(self, text: str) -> HfSet:
        """Read nested-brace notation such as ``{∅,{∅}}``; ``{}`` also means ∅."""
        s = "".join(text.split())
        pos = 0

        def fail(msg: str):
            raise ParseError(msg, f"column {pos + 1}")

        def parse_at() -> HfSet:
            nonlocal pos
            if s.startswith(EMPTY_SYMBOL, pos):
                pos += len(EMPTY_SYMBOL)
                return self.empty
            if pos >= len(s) or s[pos] != "{":
                fail("expected '{' or '∅'")
            pos += 1
            kids = []
            if pos < len(s) and s[pos] == "}":
                pos += 1
                return self.empty
            while True:
                kids.append(parse_at())
                if pos < len(s) and s[pos] == ",":
                    pos += 1
                    continue
                if pos < len(s) and s[pos] == "}":
                    pos += 1
                    return self.intern(kids)
                fail("expected ',' or '}'")

        h = parse_at()
        if pos != len(s):
            fail("trailing characters")
        return h

    def power_set(self, elements: Iterable[HfSet]) -> list[HfSet]:
        elems = sorted(set(elements), key=_key)
        out = []
        for mask in range(1 << len(elems)):
            out.append(self.intern(e for i, e in enumerate(elems) if mask >> i & 1))
        return sorted(out, key=_key)


def hf_order(a: HfSet, b: HfSet) -> int:
    """Three-way canonical comparison: rank first, then the sorted children
    lexicographically (a proper prefix is smaller).

    Iterative, so arbitrarily deep sets compare without recursion. Works
    across arenas as a purely structural comparison.
    """
    if a is b:
        return 0
    if a.rank != b.rank:
        return -1 if a.rank < b.rank else 1
    frames = [[a.children, b.children, 0]]
    while frames:
        frame = frames[-1]
        ca, cb, i = frame
        if i == len(ca) or i == len(cb):
            if len(ca) != len(cb):
                return -1 if len(ca) < len(cb) else 1
            frames.pop()
            if frames:
                frames[-1][2] += 1
            continue
        x, y = ca[i], cb[i]
        if x is y:
            frame[2] = i + 1
        elif x.rank != y.rank:
            return -1 if x.rank < y.rank else 1
        else:
            frames.append([x.children, y.children, 0])
    return 0


_key = cmp_to_key(hf_order)


def notation(h: HfSet) -> str:
    """Nested-brace text with children in canonical order, e.g. ``{∅,{∅}}``."""
    stack = [h]
    while stack:
        x = stack[-1]
        pending = [c for c in x.children if c._text is None]
        if pending:
            stack.extend(pending)
            continue
        stack.pop()
        if x._text is None:
            x._text = "{" + ",".join(c._text for c in x.children) + "}" if x.children else EMPTY_SYMBOL
    return h._text


def canonicalize(r: Rulegraph, arena: HfArena | None = None) -> list[HfSet]:
    """Canonical set of every position, computed bottom-up."""
    if arena is None:
        arena = HfArena()
    canon: list[HfSet | None] = [None] * r.n
    for p in r.order:
        canon[p] = arena.intern(canon[q] for q in r.options[p])
    return canon  # type: ignore[return-value]


def transitive_closure(sets: Iterable[HfSet]) -> set[HfSet]:
    """Smallest membership-closed collection containing ``sets``."""
    seen: set[HfSet] = set()
    stack = list(sets)
    while stack:
        h = stack.pop()
        if h not in seen:
            seen.add(h)
            stack.extend(h.children)
    return seen


def collection_to_rulegraph(collection: Iterable[HfSet]) -> Rulegraph:
    """Simple rulegraph of a membership-closed collection; arrows A -> B iff B ∈ A.

    Positions are listed in canonical order and labelled by their notation.
    """
    members = sorted(set(collection), key=_key)
    index = {h: i for i, h in enumerate(members)}
    options = []
    for h in members:
        opts = []
        for c in h.children:
            if c not in index:
                raise NotMembershipClosed(notation(c))
            opts.append(index[c])
        options.append(opts)
    return Rulegraph([notation(h) for h in members], options)
