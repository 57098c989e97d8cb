"""Option-preserving maps between rulegraphs.

A map ``alpha`` is option preserving when ``Opt(alpha(p)) == alpha(Opt(p))``
for every position. Checks return a :class:`Verdict` carrying a witness
instead of a bare boolean.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping

from .errors import BudgetExceeded, NotOptionPreserving
from .graph import Gamegraph, Rulegraph, induced_subgraph
from .hfset import HfArena, canonicalize
from .partition import Partition
from .valuation import formal_birthdays

__all__ = [
    "Verdict",
    "PositionMap",
    "check_option_preserving",
    "check_source_preserving",
    "check_faithful",
    "compose",
    "inverse",
    "identity",
    "image_rulegraph",
    "kernel",
    "are_isomorphic",
    "iter_option_preserving_maps",
    "find_option_preserving_map",
    "DEFAULT_MAP_BUDGET",
]

DEFAULT_MAP_BUDGET = 16


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check. ``witness`` explains a failure in JSON-ready form;
    ``map`` carries a positive witness such as an isomorphism."""

    ok: bool
    witness: dict[str, Any] | None = None
    map: PositionMap | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PositionMap:
    domain: Rulegraph
    codomain: Rulegraph
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.domain.n:
            raise ValueError(f"map must be total: {len(table)} images for {self.domain.n} positions")
        for q in table:
            self.codomain.check_position(q)

    @classmethod
    def from_labels(cls, domain: Rulegraph, codomain: Rulegraph, mapping: Mapping[object, object]) -> PositionMap:
        missing = [x for x in domain.labels if x not in mapping]
        if missing:
            raise ValueError(f"map is not total; no image for {missing}")
        return cls(domain, codomain, tuple(codomain.id_of(mapping[x]) for x in domain.labels))

    def __call__(self, p: int) -> int:
        return self.table[p]

    def image_of(self, positions) -> set[int]:
        return {self.table[p] for p in positions}

    def image(self) -> set[int]:
        return set(self.table)

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.codomain.n

    def label_mapping(self) -> dict[str, str]:
        return {self.domain.labels[p]: self.codomain.labels[q] for p, q in enumerate(self.table)}

    def __repr__(self) -> str:
        return f"PositionMap({self.label_mapping()})"


def identity(r: Rulegraph) -> PositionMap:
    return PositionMap(r, r, tuple(r.positions()))


def check_option_preserving(alpha: PositionMap) -> Verdict:
    dom, cod, t = alpha.domain, alpha.codomain, alpha.table
    for p in dom.positions():
        want = set(cod.options[t[p]])
        got = {t[q] for q in dom.options[p]}
        if want != got:
            return Verdict(False, {
                "position": dom.labels[p],
                "image": cod.labels[t[p]],
                "options_of_image": sorted(cod.labels[q] for q in want),
                "image_of_options": sorted(cod.labels[q] for q in got),
            })
    return Verdict(True)


def check_source_preserving(alpha: PositionMap) -> Verdict:
    dom, cod = alpha.domain, alpha.codomain
    if not (isinstance(dom, Gamegraph) and isinstance(cod, Gamegraph)):
        raise TypeError("source preservation is defined for maps between gamegraphs")
    got = alpha.table[dom.start]
    if got != cod.start:
        return Verdict(False, {
            "start": dom.labels[dom.start],
            "image": cod.labels[got],
            "expected": cod.labels[cod.start],
        })
    return Verdict(True)


def check_faithful(alpha: PositionMap) -> Verdict:
    """Arrows go to arrows, and every arrow between image positions lifts."""
    dom, cod, t = alpha.domain, alpha.codomain, alpha.table
    for p, q in dom.arrows():
        if t[q] not in cod.options[t[p]]:
            return Verdict(False, {"arrow": [dom.labels[p], dom.labels[q]], "reason": "image is not an arrow"})
    for p in dom.positions():
        lifted = {t[r] for r in dom.options[p]}
        for q in dom.positions():
            if t[q] in cod.options[t[p]] and t[q] not in lifted:
                return Verdict(False, {"arrow": [cod.labels[t[p]], cod.labels[t[q]]], "reason": "arrow does not lift"})
    return Verdict(True)


def compose(alpha: PositionMap, beta: PositionMap) -> PositionMap:
    """``alpha ∘ beta``: apply ``beta`` first."""
    if beta.codomain is not alpha.domain and beta.codomain != alpha.domain:
        raise ValueError("maps are not composable")
    return PositionMap(beta.domain, alpha.codomain, tuple(alpha.table[q] for q in beta.table))


def inverse(alpha: PositionMap) -> PositionMap:
    if not (alpha.is_injective() and alpha.is_surjective()):
        raise ValueError("only bijective maps have an inverse")
    inv = [0] * alpha.codomain.n
    for p, q in enumerate(alpha.table):
        inv[q] = p
    return PositionMap(alpha.codomain, alpha.domain, tuple(inv))


def image_rulegraph(alpha: PositionMap) -> tuple[Rulegraph, tuple[int, ...]]:
    """Subgraph of the codomain induced by the image of ``alpha``.

    Returns the image graph and, for each of its positions, the codomain id it
    came from. The image of a gamegraph is a gamegraph started at the image
    of the start.
    """
    v = check_option_preserving(alpha)
    if not v:
        raise NotOptionPreserving(f"map is not option preserving at {v.witness['position']!r}")
    sub, embedding = induced_subgraph(alpha.codomain, alpha.image())
    if isinstance(alpha.domain, Gamegraph):
        sub = Gamegraph(sub.labels, sub.options)
    return sub, embedding


def kernel(alpha: PositionMap) -> Partition:
    return Partition(alpha.table)


def _search(r: Rulegraph, s: Rulegraph, *, injective: bool, fixed: dict[int, int],
            allowed: list[set[int]] | None = None) -> Iterator[tuple[int, ...]]:
    """All maps ``r -> s`` with ``Opt(alpha(p)) == alpha(Opt(p))``.

    Positions are assigned bottom-up, so when ``p`` is reached the image of
    its options is already known and the candidates for ``alpha(p)`` are
    exactly the positions of ``s`` with that option set.
    """
    by_opts: dict[frozenset, list[int]] = defaultdict(list)
    for q in s.positions():
        by_opts[frozenset(s.options[q])].append(q)
    order = r.order
    n = len(order)
    image = [-1] * r.n
    used = [False] * s.n
    cands: list[list[int]] = [[] for _ in range(n)]
    cursor = [0] * n

    def candidates(p: int) -> list[int]:
        key = frozenset(image[q] for q in r.options[p])
        out = by_opts.get(key, [])
        if p in fixed:
            out = [q for q in out if q == fixed[p]]
        if allowed is not None:
            out = [q for q in out if q in allowed[p]]
        if injective:
            out = [q for q in out if not used[q]]
        return out

    if n == 0:
        yield ()
        return
    i = 0
    cands[0] = candidates(order[0])
    while i >= 0:
        p = order[i]
        if image[p] >= 0:
            if injective:
                used[image[p]] = False
            image[p] = -1
        if cursor[i] >= len(cands[i]):
            cursor[i] = 0
            i -= 1
            continue
        q = cands[i][cursor[i]]
        cursor[i] += 1
        image[p] = q
        if injective:
            used[q] = True
        if i + 1 == n:
            yield tuple(image)
            continue
        i += 1
        cands[i] = candidates(order[i])
        cursor[i] = 0


def iter_option_preserving_maps(r: Rulegraph, s: Rulegraph, require_source: bool = False,
                                budget: int = DEFAULT_MAP_BUDGET) -> Iterator[PositionMap]:
    """Every option-preserving map ``r -> s`` (source preserving if asked)."""
    if r.n > budget:
        raise BudgetExceeded(f"domain has {r.n} positions; map search budget is {budget}")
    fixed: dict[int, int] = {}
    if require_source:
        if not (isinstance(r, Gamegraph) and isinstance(s, Gamegraph)):
            raise TypeError("source preservation needs gamegraphs")
        fixed[r.start] = s.start
    # option-preserving maps preserve every valuation, in particular the canonical set
    arena = HfArena()
    cr, cs = canonicalize(r, arena), canonicalize(s, arena)
    if not set(cr) <= set(cs):
        return
    for table in _search(r, s, injective=False, fixed=fixed):
        yield PositionMap(r, s, table)


def find_option_preserving_map(r: Rulegraph, s: Rulegraph, require_source: bool = False,
                               budget: int = DEFAULT_MAP_BUDGET) -> PositionMap | None:
    """An option-preserving map ``r -> s``, or ``None`` when none exists."""
    return next(iter_option_preserving_maps(r, s, require_source, budget), None)


def _signature_check(r: Rulegraph, s: Rulegraph) -> dict[str, Any] | None:
    if r.n != s.n:
        return {"reason": "position counts differ", "counts": [r.n, s.n]}
    if r.arrow_count != s.arrow_count:
        return {"reason": "arrow counts differ", "counts": [r.arrow_count, s.arrow_count]}
    return None


def are_isomorphic(r: Rulegraph, s: Rulegraph) -> Verdict:
    """Digraph isomorphism; the positive verdict carries the bijection.

    Candidates for each position are restricted to positions with the same
    canonical set, formal birthday, out-degree and in-degree. For simple
    graphs canonical sets are unique, so no backtracking happens.
    """
    bad = _signature_check(r, s)
    if bad:
        return Verdict(False, bad)
    arena = HfArena()
    cr, cs = canonicalize(r, arena), canonicalize(s, arena)
    fr, fs = formal_birthdays(r), formal_birthdays(s)

    def signature(g, canon, births, p):
        return (canon[p].uid, births[p], len(g.options[p]), len(g.predecessors[p]))

    sig_r = [signature(r, cr, fr, p) for p in r.positions()]
    sig_s = [signature(s, cs, fs, q) for q in s.positions()]
    buckets: dict[tuple, set[int]] = defaultdict(set)
    for q, sig in enumerate(sig_s):
        buckets[sig].add(q)
    if sorted(sig_r) != sorted(sig_s):
        return Verdict(False, {"reason": "position invariants differ"})
    allowed = [buckets[sig] for sig in sig_r]
    for table in _search(r, s, injective=True, fixed={}, allowed=allowed):
        return Verdict(True, map=PositionMap(r, s, table))
    return Verdict(False, {"reason": "no bijective option-preserving map"})
