"""Dyadic intervals and finite dyadic partitions of [0, 1).

Both the domain X and the coefficient space Y are the unit interval with
Lebesgue measure. A cell ``DyadicInterval(k, i)`` denotes
``[i / 2**k, (i + 1) / 2**k)`` and has measure ``2**-k``.
"""

from array import array
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

from . import kernels
from .config import partition_cap
from .errors import GapError, OverlapError, PartitionError, ResourceLimitError, UnsortedError

__all__ = [
    "DyadicInterval",
    "DyadicPartition",
    "Refinement",
    "Validation",
    "cell_measure",
    "common_refinement",
    "make_uniform",
    "validate",
]


@dataclass(frozen=True, order=False)
class DyadicInterval:
    level: int
    index: int

    def __post_init__(self):
        if not isinstance(self.level, int) or self.level < 0:
            raise ValueError(f"level must be a nonnegative integer, got {self.level!r}")
        cap = partition_cap()
        if self.level > cap:
            raise ResourceLimitError(f"level {self.level} exceeds the configured maximum {cap}")
        if not isinstance(self.index, int) or not 0 <= self.index < (1 << self.level):
            raise ValueError(f"index {self.index!r} out of range for level {self.level}")

    @property
    def left(self) -> Fraction:
        return Fraction(self.index, 1 << self.level)

    @property
    def right(self) -> Fraction:
        return Fraction(self.index + 1, 1 << self.level)

    @property
    def measure(self) -> Fraction:
        return _measure(self.level)

    def contains_point(self, x) -> bool:
        return self.left <= x < self.right

    def contains(self, other: "DyadicInterval") -> bool:
        """True when ``other`` is a (not necessarily proper) subset of this cell."""
        shift = other.level - self.level
        return shift >= 0 and (other.index >> shift) == self.index

    def parent(self) -> "DyadicInterval":
        if self.level == 0:
            raise ValueError("the unit interval has no parent")
        return DyadicInterval(self.level - 1, self.index >> 1)

    def ancestor(self, level: int) -> "DyadicInterval":
        if not 0 <= level <= self.level:
            raise ValueError(f"no ancestor at level {level} for a level-{self.level} cell")
        return DyadicInterval(level, self.index >> (self.level - level))

    def children(self) -> tuple["DyadicInterval", "DyadicInterval"]:
        return (
            DyadicInterval(self.level + 1, 2 * self.index),
            DyadicInterval(self.level + 1, 2 * self.index + 1),
        )

    def sibling(self) -> "DyadicInterval":
        if self.level == 0:
            raise ValueError("the unit interval has no sibling")
        return DyadicInterval(self.level, self.index ^ 1)

    def __repr__(self):
        return f"[{self.left}, {self.right})"


def cell_measure(c: DyadicInterval) -> Fraction:
    return c.measure


class Validation(NamedTuple):
    ok: bool
    error: Optional[PartitionError] = None

    def __bool__(self):
        return self.ok


def validate(cells) -> Validation:
    """Check that ``cells`` tile [0, 1) in sorted order with no overlaps or gaps.

    Accepts a :class:`DyadicPartition` or any sequence of
    :class:`DyadicInterval`; the first violation found is reported.
    """
    if isinstance(cells, DyadicPartition):
        cells = cells.cells
    cells = list(cells)
    for pos, c in enumerate(cells):
        if not isinstance(c, DyadicInterval):
            return Validation(False, PartitionError(f"cell {pos} is not a DyadicInterval: {c!r}"))
    # sortedness is checked first so a permuted tiling is not reported as a gap
    for pos in range(1, len(cells)):
        if cells[pos].left < cells[pos - 1].left:
            return Validation(False, UnsortedError(f"cell {pos} {cells[pos]!r} starts before its predecessor"))
    cursor = Fraction(0)
    for pos, c in enumerate(cells):
        left = c.left
        if left < cursor:
            return Validation(False, OverlapError(f"cell {pos} {c!r} overlaps the cells before it"))
        if left > cursor:
            return Validation(False, GapError(f"gap [{cursor}, {left}) before cell {pos}"))
        cursor = c.right
    if cursor != 1:
        return Validation(False, GapError(f"cells cover total measure {cursor}, not 1"))
    return Validation(True)


class DyadicPartition:
    """Finite partition of [0, 1) into dyadic cells sorted by left endpoint.

    Stored as two parallel ``array('q')`` of levels and indices; treat as
    immutable. Equality and hashing are structural.
    """

    __slots__ = ("levels", "indices", "_cells", "_lefts", "_hash")

    def __init__(self, cells: Sequence[DyadicInterval]):
        cells = tuple(cells)
        result = validate(cells)
        if not result.ok:
            raise result.error
        self._set(array("q", [c.level for c in cells]), array("q", [c.index for c in cells]))
        self._cells = cells

    def _set(self, levels, indices):
        self.levels = levels
        self.indices = indices
        self._cells = None
        self._lefts = None
        self._hash = None

    @classmethod
    def _trusted(cls, levels, indices):
        # kernel output already tiles [0, 1); skip validation
        p = object.__new__(cls)
        p._set(levels, indices)
        return p

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> "DyadicPartition":
        return cls(tuple(DyadicInterval(lv, ix) for lv, ix in pairs))

    @property
    def cells(self) -> tuple[DyadicInterval, ...]:
        if self._cells is None:
            self._cells = tuple(DyadicInterval(lv, ix) for lv, ix in zip(self.levels, self.indices))
        return self._cells

    @property
    def measures(self) -> list[Fraction]:
        return [_measure(lv) for lv in self.levels]

    @property
    def depth(self) -> int:
        """Level of the finest cell."""
        return max(self.levels)

    def __len__(self):
        return len(self.levels)

    def __iter__(self):
        return iter(self.cells)

    def __getitem__(self, pos):
        return self.cells[pos]

    def __eq__(self, other):
        if not isinstance(other, DyadicPartition):
            return NotImplemented
        return self is other or (self.levels == other.levels and self.indices == other.indices)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.levels.tobytes(), self.indices.tobytes()))
        return self._hash

    def locate(self, x) -> int:
        """Position of the cell containing ``x`` (``0 <= x < 1``)."""
        if not 0 <= x < 1:
            raise ValueError(f"point {x} outside [0, 1)")
        if self._lefts is None:
            self._lefts = [Fraction(ix, 1 << lv) for lv, ix in zip(self.levels, self.indices)]
        return bisect_right(self._lefts, x) - 1

    def is_refined_by(self, level: int) -> bool:
        return max(self.levels) <= level

    def __repr__(self):
        return f"DyadicPartition({list(self.cells)!r})"


@lru_cache(maxsize=None)
def _measure(level):
    return Fraction(1, 1 << level)


def make_uniform(level: int) -> DyadicPartition:
    """The partition of [0, 1) into ``2**level`` equal cells."""
    if not isinstance(level, int) or level < 0:
        raise ValueError(f"level must be a nonnegative integer, got {level!r}")
    cap = partition_cap()
    if level > cap:
        raise ResourceLimitError(f"level {level} exceeds the configured maximum {cap}")
    return _uniform(level)


@lru_cache(maxsize=64)
def _uniform(level):
    n = 1 << level
    return DyadicPartition._trusted(array("q", [level]) * n, array("q", range(n)))


class Refinement(NamedTuple):
    partition: DyadicPartition
    parent_p: array
    parent_q: array


def common_refinement(p: DyadicPartition, q: DyadicPartition) -> Refinement:
    """Coarsest common refinement with maps from result cells to parent cells.

    ``parent_p[r]`` is the position in ``p`` of the cell containing result
    cell ``r`` (likewise ``parent_q``).
    """
    if p == q:
        ident = array("q", range(len(p)))
        return Refinement(p, ident, ident)
    levels, indices, map_p, map_q = kernels.refine(p.levels, p.indices, q.levels, q.indices)
    return Refinement(DyadicPartition._trusted(levels, indices), map_p, map_q)
