"""Concrete games as gamegraphs, sums, and the natural maps between them."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .errors import BudgetExceeded, InvalidSpec
from .graph import Gamegraph, Rulegraph
from .hfset import HfArena, collection_to_rulegraph
from .morphism import PositionMap, check_option_preserving, check_source_preserving
from .valuation import N, P

__all__ = [
    "GameSpec",
    "GAME_KINDS",
    "build",
    "star",
    "nim_tuple",
    "nim_multiset",
    "wythoff",
    "subtraction",
    "grundy",
    "maze",
    "m_graph",
    "box_sum",
    "natural_map",
    "multiset_label",
    "DEFAULT_M_GRAPH_DEPTH",
]

DEFAULT_M_GRAPH_DEPTH = 3


def multiset_label(items: Iterable[int], descending: bool = False) -> str:
    items = sorted(items, reverse=descending)
    if not items:
        return "∅"
    return "⟦" + ",".join(map(str, items)) + "⟧"


def tuple_label(items: Sequence[int]) -> str:
    return "(" + ",".join(map(str, items)) + ")"


def _closure(start: Hashable, moves: Callable[[Hashable], Iterable[Hashable]],
             label: Callable[[Hashable], str]) -> Gamegraph:
    """Gamegraph of everything reachable from ``start``, in BFS discovery order."""
    ids = {start: 0}
    states = [start]
    options: list[list[int]] = []
    queue = deque([start])
    while queue:
        state = queue.popleft()
        opts = []
        for nxt in moves(state):
            if nxt not in ids:
                ids[nxt] = len(states)
                states.append(nxt)
                queue.append(nxt)
            opts.append(ids[nxt])
        options.append(opts)
    return Gamegraph([label(s) for s in states], options)


def _nonneg(*values: int) -> None:
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InvalidSpec(f"expected a non-negative integer, got {v!r}")


def star(n: int) -> Gamegraph:
    """One-pile NIM: positions 0..n, each position moves to every smaller one."""
    _nonneg(n)
    return Gamegraph([str(k) for k in range(n + 1)], [range(k) for k in range(n + 1)])


def nim_tuple(piles: Sequence[int]) -> Gamegraph:
    """NIM with ordered piles; positions are tuples, labelled like ``(3,2)``."""
    piles = tuple(piles)
    _nonneg(*piles)

    def moves(state):
        for i, a in enumerate(state):
            for b in range(a - 1, -1, -1):
                yield state[:i] + (b,) + state[i + 1:]

    return _closure(piles, moves, tuple_label)


def nim_multiset(piles: Sequence[int]) -> Gamegraph:
    """NIM with unordered piles; labels like ``⟦2,3⟧``."""
    piles = tuple(sorted(piles))
    _nonneg(*piles)

    def moves(state):
        for i, a in enumerate(state):
            if i and state[i - 1] == a:
                continue
            for b in range(a - 1, -1, -1):
                yield tuple(sorted(state[:i] + (b,) + state[i + 1:]))

    return _closure(piles, moves, multiset_label)


def wythoff(a: int, b: int) -> Gamegraph:
    """Wythoff's game: take any number from one heap, or the same from both."""
    _nonneg(a, b)

    def moves(state):
        x, y = state
        for k in range(1, y + 1):
            yield tuple(sorted((x, y - k)))
        for k in range(1, x + 1):
            yield tuple(sorted((x - k, y)))
        for k in range(1, x + 1):
            yield (x - k, y - k)

    return _closure(tuple(sorted((a, b))), moves, multiset_label)


def subtraction(n: int, allowed: Iterable[int]) -> Gamegraph:
    """Subtraction game on one heap of ``n`` with the given subtraction set."""
    allowed = sorted(set(allowed))
    _nonneg(n)
    if not allowed or any(not isinstance(k, int) or k < 1 for k in allowed):
        raise InvalidSpec("subtraction set must be non-empty with entries >= 1")
    return _closure(n, lambda h: [h - k for k in allowed if k <= h], str)


def grundy(n: int) -> Gamegraph:
    """Grundy's game: split one heap into two non-equal non-empty heaps.

    Generated forward from the single heap ``n``; labels list heaps in
    descending order.
    """
    _nonneg(n)

    def moves(state):
        for h in sorted(set(state), reverse=True):
            rest = list(state)
            rest.remove(h)
            for small in range((h - 1) // 2, 0, -1):
                yield tuple(sorted(rest + [h - small, small], reverse=True))

    return _closure((n,) if n else (), moves, lambda s: multiset_label(s, descending=True))


def _grundy_reduced(n: int) -> Gamegraph:
    """Grundy's game with heaps of size 1 and 2 discarded as soon as they appear."""

    def keep(heaps):
        return tuple(sorted((h for h in heaps if h > 2), reverse=True))

    def moves(state):
        for h in sorted(set(state), reverse=True):
            rest = list(state)
            rest.remove(h)
            for small in range((h - 1) // 2, 0, -1):
                yield keep(rest + [h - small, small])

    return _closure(keep((n,)), moves, lambda s: multiset_label(s, descending=True))


def maze(rows: int, cols: int) -> tuple[Gamegraph, dict[int, str]]:
    """Mouse in a maze: ``(column,row)`` from ``(0,0)``, moving right or up.

    Play stops on the top row (cheese, labelled N) or the rightmost column
    (cat, labelled P). Returns the gamegraph and the terminal labelling.
    """
    _nonneg(rows, cols)
    if rows < 2 or cols < 2:
        raise InvalidSpec("a maze needs at least 2 rows and 2 columns")

    def terminal(c):
        return c[1] == rows - 1 or c[0] == cols - 1

    def moves(c):
        if terminal(c):
            return []
        x, y = c
        return [(x + 1, y), (x, y + 1)]

    g = _closure((0, 0), moves, lambda c: f"({c[0]},{c[1]})")
    labeling = {}
    for p, label in enumerate(g.labels):
        x, y = map(int, label.strip("()").split(","))
        if terminal((x, y)):
            labeling[p] = N if y == rows - 1 else P
    return g, labeling


def m_graph(d: int, allow_large: bool = False) -> Rulegraph:
    """All hereditarily finite sets of rank at most ``d``, arrows ``A -> B`` for ``B ∈ A``."""
    _nonneg(d)
    limit = 4 if allow_large else DEFAULT_M_GRAPH_DEPTH
    if d > limit:
        raise BudgetExceeded(f"m_graph({d}) exceeds the depth limit {limit}")
    arena = HfArena()
    level = [arena.empty]
    for _ in range(d):
        level = arena.power_set(level)
    return collection_to_rulegraph(level)


def box_sum(r: Rulegraph, s: Rulegraph) -> Rulegraph:
    """Sum of two rulegraphs: a move changes exactly one coordinate."""
    m = s.n
    labels = [f"({a},{b})" for a in r.labels for b in s.labels]
    if len(set(labels)) != len(labels):
        labels = [json.dumps([a, b], ensure_ascii=False) for a in r.labels for b in s.labels]
    options = []
    for x in r.positions():
        for y in s.positions():
            opts = [x * m + y2 for y2 in s.options[y]]
            opts += [x2 * m + y for x2 in r.options[x]]
            options.append(opts)
    if isinstance(r, Gamegraph) and isinstance(s, Gamegraph):
        return Gamegraph(labels, options)
    return Rulegraph(labels, options)


@dataclass(frozen=True)
class GameSpec:
    """Selector for one of the built-in games, e.g. ``GameSpec("wythoff", (1, 2))``."""

    kind: str
    params: tuple = ()
    allow_large: bool = False


GAME_KINDS = ("star", "nim_tuple", "nim_multiset", "wythoff", "subtraction", "grundy", "maze", "m_graph")


def build(spec: GameSpec):
    """Build the game; ``maze`` returns ``(gamegraph, labeling)``."""
    kind, params = spec.kind.replace("-", "_"), tuple(spec.params)
    try:
        if kind == "star":
            (n,) = params
            return star(n)
        if kind == "nim_tuple":
            return nim_tuple(params)
        if kind == "nim_multiset":
            return nim_multiset(params)
        if kind == "wythoff":
            a, b = params
            return wythoff(a, b)
        if kind == "subtraction":
            n, *allowed = params
            if len(allowed) == 1 and not isinstance(allowed[0], int):
                allowed = list(allowed[0])
            return subtraction(n, allowed)
        if kind == "grundy":
            (n,) = params
            return grundy(n)
        if kind == "maze":
            rows, cols = params
            return maze(rows, cols)
        if kind == "m_graph":
            (d,) = params
            return m_graph(d, allow_large=spec.allow_large)
    except ValueError as exc:
        raise InvalidSpec(f"bad parameters {params!r} for {spec.kind}: {exc}") from None
    raise InvalidSpec(f"unknown game {spec.kind!r}; choose from {', '.join(GAME_KINDS)}")


NATURAL_MAPS = ("tuple_to_multiset", "wythoff_to_subtraction", "grundy_drop_small_heaps")


def natural_map(kind: str, *params) -> PositionMap:
    """The hand-made maps between games, verified before being returned.

    * ``tuple_to_multiset(piles...)``: forget the order of the NIM piles.
    * ``wythoff_to_subtraction(a, b)``: ``⟦x,y⟧ -> x+y`` into the subtraction
      game on ``a+b`` with subtraction set {1,2}; only small cases verify.
    * ``grundy_drop_small_heaps(n)``: discard heaps of size 1 and 2.
    """
    kind = kind.replace("-", "_")
    if kind == "tuple_to_multiset":
        g, h = nim_tuple(params), nim_multiset(params)
        table = [h.id_of(multiset_label(map(int, x.strip("()").split(",")))) if x != "()" else h.id_of("∅")
                 for x in g.labels]
    elif kind == "wythoff_to_subtraction":
        if len(params) != 2:
            raise InvalidSpec("wythoff_to_subtraction takes two heap sizes")
        a, b = params
        g, h = wythoff(a, b), subtraction(a + b, (1, 2))
        table = [h.id_of(str(sum(_heaps(x)))) for x in g.labels]
    elif kind == "grundy_drop_small_heaps":
        if len(params) != 1:
            raise InvalidSpec("grundy_drop_small_heaps takes one heap size")
        (n,) = params
        g, h = grundy(n), _grundy_reduced(n)
        table = [h.id_of(multiset_label([x for x in _heaps(lbl) if x > 2], descending=True)) for lbl in g.labels]
    else:
        raise InvalidSpec(f"unknown natural map {kind!r}; choose from {', '.join(NATURAL_MAPS)}")
    alpha = PositionMap(g, h, tuple(table))
    if not check_option_preserving(alpha) or not check_source_preserving(alpha):
        raise InvalidSpec(f"{kind}{params} is not an option and source preserving map")
    return alpha


def _heaps(label: str) -> list[int]:
    body = label.strip("⟦⟧")
    if body in ("", "∅"):
        return []
    return [int(x) for x in body.split(",")]
