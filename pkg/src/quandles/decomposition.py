"""Iterated orbit refinement down to the maximal connected decomposition.

The refinement operator splits every block of a partition into the orbits of
that block under its own right translations.  For a finite structure the
iteration reaches a fixed point, whose blocks are the maximal connected
pieces; the number of rounds needed is the depth.

The iteration core is generic in how a block is refined, so the multiple
conjugation quandle layer reuses it for partitions of its group index set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterable

from .quandle import FiniteQuandle, Partition, connected_components

DEFAULT_MAX_ITER = 64


def _max_iter_default() -> int:
    value = os.environ.get("QUANDLES_MAX_ITER")
    return int(value) if value else DEFAULT_MAX_ITER


@dataclass(frozen=True)
class Decomposition:
    """The refinement tower: levels[0] is the whole set, each level refines
    the previous one, and levels[depth] == levels[depth + 1] == final."""

    levels: tuple[Partition, ...]
    depth: int
    final: Partition

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "levels": [level.to_json() for level in self.levels],
        }

    @classmethod
    def from_json(cls, data) -> "Decomposition":
        levels = tuple(Partition.from_json(level) for level in data["levels"])
        return cls(levels, int(data["depth"]), levels[-1])


def iterate_refinement(start: Partition,
                       refine_block: Callable[[tuple[int, ...]], Iterable[Iterable[int]]],
                       max_iter: int | None = None) -> Decomposition:
    """Iterate block-wise refinement from `start` until a fixed point.

    `refine_block` must return a partition of its block; blocks refine
    independently, so processing order cannot affect the result.  The cap
    guards against structures fed in from outside that do not actually
    stabilize; genuinely finite inputs stop well before size(X) rounds.
    """
    if max_iter is None:
        max_iter = _max_iter_default()
    levels = [start]
    for _ in range(max_iter):
        refined = Partition(
            tuple(piece) for block in levels[-1].blocks for piece in refine_block(block)
        )
        levels.append(refined)
        if refined == levels[-2]:
            return Decomposition(tuple(levels), len(levels) - 2, refined)
    raise RuntimeError(f"no fixed point within {max_iter} refinement rounds")


def refine_once(q: FiniteQuandle, partition: Partition) -> Partition:
    """Split every block of the partition into its own connected components.

    Each block must be a subquandle (connected_components raises
    NotASubquandle otherwise).
    """
    return Partition(
        tuple(piece)
        for block in partition.blocks
        for piece in connected_components(q, block).blocks
    )


def maximal_decomposition(q: FiniteQuandle, max_iter: int | None = None) -> Decomposition:
    """The maximal connected subquandle decomposition, with the full tower."""
    start = Partition([range(q.size)])
    return iterate_refinement(
        start, lambda block: connected_components(q, block).blocks, max_iter
    )


def depth(q: FiniteQuandle, max_iter: int | None = None) -> int:
    """Rounds of refinement needed to stabilize; 0 exactly when connected."""
    return maximal_decomposition(q, max_iter).depth
