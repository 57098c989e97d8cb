"""Random constructions of option-preserving maps for property tests."""

from __future__ import annotations

import random

from gamegraph import (
    Gamegraph,
    Partition,
    PositionMap,
    Rulegraph,
    compose,
    identity,
    quotient,
    random_gamegraph,
    random_rulegraph,
    sources,
)


def random_merge_projection(g: Rulegraph, rng: random.Random, steps: int | None = None) -> PositionMap:
    """Merge random pairs with equal option sets a few times; returns the composite projection."""
    if steps is None:
        steps = rng.randint(0, g.n)
    alpha = identity(g)
    current = g
    for _ in range(steps):
        groups: dict[tuple[int, ...], list[int]] = {}
        for p in current.positions():
            groups.setdefault(current.options[p], []).append(p)
        choices = [grp for grp in groups.values() if len(grp) > 1]
        if not choices:
            break
        block = rng.sample(rng.choice(choices), 2)
        q = quotient(current, Partition.from_blocks(current.n, [block]))
        alpha = compose(q.projection, alpha)
        current = q.graph
    return alpha


def shuffled(g: Rulegraph, rng: random.Random) -> tuple[Rulegraph, PositionMap]:
    """Same graph with permuted ids; returns it with the relabelling map ``g -> shuffled``."""
    perm = list(g.positions())
    rng.shuffle(perm)
    labels = [None] * g.n
    options: list[list[int]] = [[] for _ in range(g.n)]
    for p in g.positions():
        labels[perm[p]] = g.labels[p]
        options[perm[p]] = [perm[q] for q in g.options[p]]
    cls = Gamegraph if isinstance(g, Gamegraph) else Rulegraph
    h = cls(labels, options)
    return h, PositionMap(g, h, tuple(perm))


def extend_above(g: Rulegraph, rng: random.Random, extra: int, gamegraph: bool) -> tuple[Rulegraph, PositionMap]:
    """Add ``extra`` new positions whose options are random old or new positions.

    The old positions form a down-closed part, so the inclusion is option
    preserving. With ``gamegraph`` a final top joins every source.
    """
    labels = list(g.labels)
    options = [list(o) for o in g.options]
    for i in range(extra):
        opts = [q for q in range(len(labels)) if rng.random() < 0.4]
        labels.append(f"new{i}")
        options.append(opts)
    cls: type = Rulegraph
    if gamegraph:
        probe = Rulegraph(labels, options)
        tops = sorted(sources(probe))
        if len(tops) > 1:
            labels.append("top")
            options.append(tops)
        cls = Gamegraph
    h = cls(labels, options)
    return h, PositionMap(g, h, tuple(g.positions()))


def random_map(rng: random.Random, max_n: int = 10, gamegraph: bool = False,
               max_codomain: int | None = None) -> PositionMap:
    """A random option-preserving map: merge projection, optional extension, id shuffle."""
    n = rng.randint(1, max_n)
    g = random_gamegraph(rng, n, rng.uniform(0.2, 0.6)) if gamegraph else random_rulegraph(rng, n, rng.uniform(0.1, 0.6))
    alpha = random_merge_projection(g, rng)
    room = (max_codomain if max_codomain is not None else max_n) - alpha.codomain.n
    if room > 0 and rng.random() < 0.5:
        _, inc = extend_above(alpha.codomain, rng, rng.randint(1, room), gamegraph)
        if inc.codomain.n <= (max_codomain or 10 ** 9):
            alpha = compose(inc, alpha)
    h, perm = shuffled(alpha.codomain, rng)
    return compose(perm, alpha)
