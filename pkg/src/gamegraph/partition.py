"""Partitions of the positions of a graph (equivalence relations)."""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Rulegraph

__all__ = ["Partition"]


class Partition:
    """An equivalence relation on ``range(n)`` stored as a block index per element.

    Block ids are normalised to first-occurrence order, so two equal relations
    always have equal ``block_of`` tuples and blocks are ordered by their
    smallest member.
    """

    __slots__ = ("block_of", "_blocks")

    def __init__(self, block_ids: Sequence[object]):
        seen: dict[object, int] = {}
        self.block_of = tuple(seen.setdefault(b, len(seen)) for b in block_ids)
        self._blocks: tuple[tuple[int, ...], ...] | None = None

    @classmethod
    def discrete(cls, n: int) -> Partition:
        return cls(range(n))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> Partition:
        """Blocks given explicitly; positions not mentioned become singletons."""
        ids: list[object] = [("s", i) for i in range(n)]
        seen: set[int] = set()
        for b, block in enumerate(blocks):
            for p in block:
                if not (isinstance(p, int) and 0 <= p < n):
                    raise ValueError(f"position {p!r} out of range")
                if p in seen:
                    raise ValueError(f"position {p} appears in two blocks")
                seen.add(p)
                ids[p] = ("b", b)
        return cls(ids)

    @classmethod
    def from_labels(cls, graph: Rulegraph, blocks: Iterable[Iterable[object]]) -> Partition:
        return cls.from_blocks(graph.n, [[graph.id_of(x) for x in block] for block in blocks])

    @property
    def n(self) -> int:
        return len(self.block_of)

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        if self._blocks is None:
            out: list[list[int]] = [[] for _ in range(self.block_count)]
            for p, b in enumerate(self.block_of):
                out[b].append(p)
            self._blocks = tuple(tuple(b) for b in out)
        return self._blocks

    @property
    def block_count(self) -> int:
        return max(self.block_of, default=-1) + 1

    def nontrivial_blocks(self) -> list[tuple[int, ...]]:
        return [b for b in self.blocks if len(b) > 1]

    def is_discrete(self) -> bool:
        return self.block_count == self.n

    def related(self, p: int, q: int) -> bool:
        return self.block_of[p] == self.block_of[q]

    def refines(self, other: Partition) -> bool:
        """True when every block of ``self`` lies inside a block of ``other``."""
        if other.n != self.n:
            raise ValueError("partitions of different sets")
        image: dict[int, int] = {}
        for a, b in zip(self.block_of, other.block_of):
            if image.setdefault(a, b) != b:
                return False
        return True

    def __le__(self, other: Partition) -> bool:
        return self.refines(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.block_of == other.block_of

    def __hash__(self) -> int:
        return hash(self.block_of)

    def label_blocks(self, graph: Rulegraph, include_singletons: bool = False) -> list[list[str]]:
        """Blocks as sorted label lists, sorted; singletons omitted by default."""
        out = [sorted(graph.labels[p] for p in b) for b in self.blocks if include_singletons or len(b) > 1]
        return sorted(out)

    def notation(self, graph: Rulegraph) -> str:
        """Bar-separated nontrivial blocks, e.g. ``12|34|56``; ``Δ`` when discrete."""
        blocks = self.label_blocks(graph)
        if not blocks:
            return "Δ"
        sep = "" if all(len(x) == 1 for b in blocks for x in b) else ","
        return "|".join(sep.join(b) for b in blocks)

    def __repr__(self) -> str:
        return f"Partition({[list(b) for b in self.nontrivial_blocks()]}, n={self.n})"
