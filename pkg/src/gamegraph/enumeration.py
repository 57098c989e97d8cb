"""Counting simple rulegraphs, by formal birthday and by number of positions.

A simple rulegraph is the same thing as a membership-closed collection of
hereditarily finite sets, so both schemes enumerate such collections:

* by formal birthday, one layer of new top sets at a time, together with the
  closed-form index recursion over arbitrary-precision integers;
* by number of positions, adding sets in strictly increasing canonical order,
  which produces every collection exactly once without isomorphism checks.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from math import comb
from typing import Iterator, Literal

from .errors import BudgetExceeded
from .graph import Rulegraph
from .hfset import HfArena, HfSet, canonicalize, collection_to_rulegraph, notation

__all__ = [
    "CountTable",
    "tower2",
    "index_table",
    "x_total",
    "count_simple_rulegraphs",
    "iter_simple_rulegraphs",
    "enumerate_simple_rulegraphs",
    "iter_by_fbd",
    "enumerate_by_fbd",
    "count_min_positions",
    "feasibility",
    "canonical_key",
    "decimal_string",
    "DEFAULT_TOWER_BITS",
    "DEFAULT_TABLE_DEPTH",
    "DEFAULT_TOTAL_DEPTH",
    "DEFAULT_COUNT_BUDGET",
    "DEFAULT_STREAM_BUDGET",
    "DEFAULT_FBD_BUDGET",
]

DEFAULT_TOWER_BITS = 1 << 20
DEFAULT_TABLE_DEPTH = 3
DEFAULT_TOTAL_DEPTH = 4
DEFAULT_COUNT_BUDGET = 7
DEFAULT_STREAM_BUDGET = 5
DEFAULT_FBD_BUDGET = 3

Mode = Literal["count", "stream"]


# ---------------------------------------------------------------------------
# closed forms


def tower2(n: int, bit_budget: int = DEFAULT_TOWER_BITS) -> int:
    """Tower of twos of height ``n``: 1, 2, 4, 16, 65536, 2**65536, ..."""
    if n < 0:
        raise ValueError("height must be non-negative")
    value = 1
    for _ in range(n):
        if value >= bit_budget:
            raise BudgetExceeded(f"tower of height {n} needs more than {bit_budget} bits")
        value = 1 << value
    return value


def _at_most_tower(m: int, d: int) -> bool:
    """``m <= tower2(d)`` without computing the tower."""
    if m <= 1:
        return True
    if d == 0:
        return False
    # m <= 2**k  iff  (m - 1).bit_length() <= k
    return _at_most_tower((m - 1).bit_length(), d - 1)


def decimal_string(x: int) -> str:
    """Decimal text of an integer of any size (lifts the interpreter's digit limit)."""
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        return str(x)
    old = getter()
    sys.set_int_max_str_digits(0)
    try:
        return str(x)
    finally:
        sys.set_int_max_str_digits(old)


def count_min_positions(d: int) -> int:
    """Number of simple rulegraphs with formal birthday ``d`` and only ``d + 1`` positions."""
    if d < 0:
        raise ValueError("formal birthday must be non-negative")
    return 1 << (comb(d + 1, 2) - d)


def feasibility(m: int, d: int) -> bool:
    """Whether some simple rulegraph has ``m`` positions and formal birthday ``d``."""
    if d < 0:
        return False
    return d + 1 <= m and _at_most_tower(m, d)


@dataclass(frozen=True)
class CountTable:
    """``levels[d][(t, u)]`` is the number of simple rulegraphs of formal
    birthday ``d`` with ``t`` top positions and ``u`` others."""

    levels: tuple[dict[tuple[int, int], int], ...]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def indices(self, d: int) -> list[tuple[int, int]]:
        return sorted(self.levels[d])

    def total(self, d: int) -> int:
        return sum(self.levels[d].values())

    def totals(self) -> list[int]:
        return [self.total(d) for d in range(len(self.levels))]


def index_table(d: int, max_depth: int = DEFAULT_TABLE_DEPTH) -> CountTable:
    """Index recursion up to depth ``d``.

    A graph of index ``(t, u)`` grows ``T`` new tops chosen among the
    ``2**(t+u) - 2**u`` subsets that contain an old top, giving index
    ``(T, t + u)``.
    """
    if d < 0:
        raise ValueError("depth must be non-negative")
    if d > max_depth:
        raise BudgetExceeded(f"index table depth {d} exceeds the budget {max_depth}")
    levels = [{(1, 0): 1}]
    for _ in range(d):
        nxt: dict[tuple[int, int], int] = {}
        for (t, u), x in levels[-1].items():
            choices = (1 << (t + u)) - (1 << u)
            for big_t in range(1, choices + 1):
                key = (big_t, t + u)
                nxt[key] = nxt.get(key, 0) + comb(choices, big_t) * x
        levels.append(nxt)
    return CountTable(tuple(levels))


def x_total(d: int, max_depth: int = DEFAULT_TOTAL_DEPTH) -> int:
    """Number of simple rulegraphs of formal birthday exactly ``d``.

    Summing the binomials over ``T`` collapses each index of depth ``d - 1``
    to ``2**(2**(t+u) - 2**u) - 1``, so only the previous table is needed.
    """
    if d < 0:
        raise ValueError("depth must be non-negative")
    if d > max_depth:
        raise BudgetExceeded(f"x_{d} exceeds the depth budget {max_depth}")
    if d == 0:
        return 1
    prev = index_table(d - 1, max_depth=max(d - 1, 0))
    return sum(((1 << ((1 << (t + u)) - (1 << u))) - 1) * x for (t, u), x in prev.levels[d - 1].items())


# ---------------------------------------------------------------------------
# by number of positions
#
# A collection is a list of sets in increasing canonical order; set k is the
# bitmask of the indices of its elements. Because canonical order extends
# rank, the elements of a new set are always already present.


def _greater(a: int, b: int, ranks: list[int]) -> bool:
    """Canonical comparison ``a > b`` of two sets given as index bitmasks."""
    if a == b:
        return False
    ra = ranks[a.bit_length() - 1] + 1 if a else 0
    rb = ranks[b.bit_length() - 1] + 1 if b else 0
    if ra != rb:
        return ra > rb
    diff = a ^ b
    low = diff & -diff
    above = ~((low << 1) - 1)
    if a & low:
        # a has the smaller element here unless b has run out (b is a prefix of a)
        return not (b & above)
    return bool(a & above)


def _check_budget(n: int, budget: int) -> None:
    if n < 0:
        raise ValueError("number of positions must be non-negative")
    if n > budget:
        raise BudgetExceeded(f"n = {n} exceeds the enumeration budget {budget}")


def _walk(n: int, gamegraphs_only: bool, emit) -> int:
    """Depth-first search over collections; ``emit`` receives complete ones
    (or ``None`` to only count). Returns the number found."""
    if n == 0:
        return 0
    masks = [0]
    ranks = [0]
    found = 0

    def rec(sources: int) -> None:
        nonlocal found
        k = len(masks)
        last = masks[-1]
        final = k + 1 == n
        for c in range(1, 1 << k):
            if not _greater(c, last, ranks):
                continue
            rest = sources & ~c
            if final:
                if gamegraphs_only and rest:
                    continue
                found += 1
                if emit is not None:
                    emit(masks + [c])
                continue
            masks.append(c)
            ranks.append(ranks[c.bit_length() - 1] + 1)
            rec(rest | (1 << k))
            masks.pop()
            ranks.pop()

    if n == 1:
        if emit is not None:
            emit([0])
        return 1
    rec(1)
    return found


def _masks_to_rulegraph(masks: list[int]) -> Rulegraph:
    arena = HfArena()
    sets: list[HfSet] = []
    for m in masks:
        sets.append(arena.intern(sets[i] for i in range(m.bit_length()) if m >> i & 1))
    return collection_to_rulegraph(sets)


def count_simple_rulegraphs(n: int, gamegraphs_only: bool = False, budget: int = DEFAULT_COUNT_BUDGET) -> int:
    """Number of simple rulegraphs (or gamegraphs) with ``n`` positions, up to isomorphism."""
    _check_budget(n, budget)
    return _walk(n, gamegraphs_only, None)


def iter_simple_rulegraphs(n: int, gamegraphs_only: bool = False,
                           budget: int = DEFAULT_STREAM_BUDGET) -> Iterator[Rulegraph]:
    """Every simple rulegraph with ``n`` positions, one per isomorphism class.

    Positions are listed in canonical order and labelled by their set notation.
    """
    _check_budget(n, budget)
    found: list[list[int]] = []
    _walk(n, gamegraphs_only, found.append)
    for masks in found:
        yield _masks_to_rulegraph(masks)


def enumerate_simple_rulegraphs(n: int, mode: Mode = "count", gamegraphs_only: bool = False,
                                budget: int | None = None):
    """``count`` returns an int; ``stream`` returns an iterator of rulegraphs."""
    if mode == "count":
        return count_simple_rulegraphs(n, gamegraphs_only, DEFAULT_COUNT_BUDGET if budget is None else budget)
    if mode == "stream":
        return iter_simple_rulegraphs(n, gamegraphs_only, DEFAULT_STREAM_BUDGET if budget is None else budget)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# by formal birthday


def _fbd_collections(d: int) -> Iterator[list[HfSet]]:
    """Collections of formal birthday exactly ``d``, sorted canonically."""
    arena = HfArena()

    def grow(collection: list[HfSet], tops: list[HfSet], depth: int) -> Iterator[list[HfSet]]:
        if depth == d:
            yield collection
            return
        top_set = set(tops)
        pool = collection
        candidates = []
        for mask in range(1, 1 << len(pool)):
            members = [pool[i] for i in range(len(pool)) if mask >> i & 1]
            if top_set.intersection(members):
                candidates.append(arena.intern(members))
        for family in range(1, 1 << len(candidates)):
            new = [candidates[i] for i in range(len(candidates)) if family >> i & 1]
            yield from grow(collection + new, new, depth + 1)

    yield from grow([arena.empty], [arena.empty], 0)


def iter_by_fbd(d: int, budget: int = DEFAULT_FBD_BUDGET) -> Iterator[Rulegraph]:
    """Every simple rulegraph of formal birthday exactly ``d``, one per isomorphism class."""
    if d < 0:
        raise ValueError("formal birthday must be non-negative")
    if d > budget:
        raise BudgetExceeded(f"formal birthday {d} exceeds the streaming budget {budget}")
    for collection in _fbd_collections(d):
        yield collection_to_rulegraph(collection)


def enumerate_by_fbd(d: int, mode: Mode = "count", budget: int = DEFAULT_FBD_BUDGET):
    """``count`` walks the same generation without building graphs."""
    if mode == "stream":
        return iter_by_fbd(d, budget)
    if mode != "count":
        raise ValueError(f"unknown mode {mode!r}")
    if d < 0:
        raise ValueError("formal birthday must be non-negative")
    if d > budget:
        raise BudgetExceeded(f"formal birthday {d} exceeds the enumeration budget {budget}")
    return sum(1 for _ in _fbd_collections(d))


def canonical_key(r: Rulegraph) -> frozenset[str]:
    """Notation of every position: equal keys mean isomorphic simple rulegraphs."""
    return frozenset(notation(h) for h in canonicalize(r))
