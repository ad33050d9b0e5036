"""Exact commutative C*-algebra backends.

Two implementations of :class:`AlgebraElement`:

* :class:`StepFunction` -- rational step functions on dyadic partitions of
  Y = [0, 1), a computable slice of L-infinity(Y) with the sup norm.
* :class:`TupleElement` -- rational n-tuples with the max norm, i.e.
  functions on n points.

Scalars are real, so the involution is the identity.
"""

import operator
from array import array
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .errors import BackendMismatchError
from .partition import DyadicInterval, DyadicPartition, make_uniform
from .rational import as_rational, exact

__all__ = [
    "AlgebraElement",
    "StepFunction",
    "TupleElement",
    "add",
    "adjoint",
    "indicator",
    "is_positive",
    "multiply",
    "norm",
    "sublevel_measure",
    "total",
]

_RELATIONS = {
    ">=": operator.ge,
    ">": operator.gt,
    "<=": operator.le,
    "<": operator.lt,
}


class AlgebraElement(ABC):
    """Interface shared by the exact backends."""

    @abstractmethod
    def check_compatible(self, other): ...

    @abstractmethod
    def zero_like(self) -> "AlgebraElement": ...

    @abstractmethod
    def one_like(self) -> "AlgebraElement": ...

    @abstractmethod
    def __add__(self, other): ...

    @abstractmethod
    def __sub__(self, other): ...

    @abstractmethod
    def __mul__(self, other): ...

    @abstractmethod
    def __neg__(self): ...

    @abstractmethod
    def scale(self, q) -> "AlgebraElement":
        """Multiply by a rational scalar."""

    @abstractmethod
    def norm(self) -> Fraction: ...

    @abstractmethod
    def is_positive(self) -> bool: ...

    @abstractmethod
    def integrate(self) -> Fraction:
        """Integral against the backend's reference measure.

        Lebesgue measure for step functions, counting measure for tuples.
        """

    @abstractmethod
    def canonical(self) -> "AlgebraElement": ...

    def adjoint(self):
        return self

    def is_zero(self) -> bool:
        return self.norm() == 0


@dataclass(frozen=True)
class StepFunction(AlgebraElement):
    """Rational step function on a dyadic partition of [0, 1).

    The constructor stores the canonical form: equal-valued sibling cells are
    merged until none remain, so ``==`` decides equality as functions.
    Use :meth:`raw` to keep a non-canonical representation.
    """

    partition: DyadicPartition
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(exact(v) for v in self.values)
        if len(values) != len(self.partition):
            raise ValueError(f"{len(values)} values for {len(self.partition)} cells")
        part, values = _canonicalize(self.partition, values)
        object.__setattr__(self, "partition", part)
        object.__setattr__(self, "values", values)

    @classmethod
    def raw(cls, partition: DyadicPartition, values: Sequence) -> "StepFunction":
        values = tuple(exact(v) for v in values)
        if len(values) != len(partition):
            raise ValueError(f"{len(values)} values for {len(partition)} cells")
        obj = object.__new__(cls)
        object.__setattr__(obj, "partition", partition)
        object.__setattr__(obj, "values", values)
        obj.__dict__["_raw"] = True
        return obj

    @classmethod
    def _from_canonical(cls, partition, values):
        obj = object.__new__(cls)
        object.__setattr__(obj, "partition", partition)
        object.__setattr__(obj, "values", values)
        return obj

    @classmethod
    def constant(cls, c) -> "StepFunction":
        return cls._from_canonical(make_uniform(0), (exact(c),))

    @classmethod
    def from_uniform(cls, level: int, values: Sequence) -> "StepFunction":
        return cls(make_uniform(level), values)

    def canonical(self) -> "StepFunction":
        if not self.__dict__.get("_raw"):
            return self
        return StepFunction(self.partition, self.values)

    def check_compatible(self, other):
        if not isinstance(other, StepFunction):
            raise BackendMismatchError(f"cannot combine a step function with {type(other).__name__}")

    def zero_like(self):
        return StepFunction.constant(0)

    def one_like(self):
        return StepFunction.constant(1)

    def _pointwise(self, other, op):
        self.check_compatible(other)
        p = self.partition
        q = other.partition
        levels, indices, vals = kernels.combine(
            p.levels, p.indices, list(self.values), q.levels, q.indices, list(other.values), op
        )
        return StepFunction._from_canonical(DyadicPartition._trusted(levels, indices), tuple(vals))

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._pointwise(other, kernels.ADD)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._pointwise(other, kernels.SUB)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._pointwise(other, kernels.MUL)

    def __neg__(self):
        return StepFunction._from_canonical(self.partition, tuple(-v for v in self.values))

    def scale(self, q):
        q = exact(q)
        if q == 0:
            return self.zero_like()
        return StepFunction._from_canonical(self.partition, tuple(exact(q * v) for v in self.values))

    def norm(self):
        return max(abs(v) for v in self.values)

    def is_positive(self):
        return all(v >= 0 for v in self.values)

    def integrate(self):
        return sum((v * m for m, v in zip(self.partition.measures, self.values)), Fraction(0))

    def __call__(self, y):
        """Value at the point ``y`` of [0, 1)."""
        return self.values[self.partition.locate(y)]

    def sublevel_measure(self, t, relation=">="):
        test = _RELATIONS[relation]
        t = as_rational(t)
        return sum(
            (m for m, v in zip(self.partition.measures, self.values) if test(v, t)), Fraction(0)
        )

    def on_uniform(self, level: int) -> list[Fraction]:
        """Cell values on ``make_uniform(level)``; the partition must be no finer."""
        if not self.partition.is_refined_by(level):
            raise ValueError(f"step function is finer than level {level}")
        out = []
        for lv, v in zip(self.partition.levels, self.values):
            out.extend([v] * (1 << (level - lv)))
        return out

    def __repr__(self):
        body = ", ".join(f"{c!r}: {v}" for c, v in zip(self.partition, self.values))
        return f"StepFunction({{{body}}})"


def _canonicalize(partition, values):
    if len(values) == 1:
        return partition, tuple(values)
    levels, indices, vals = kernels.merge_siblings(partition.levels, partition.indices, list(values))
    if len(vals) == len(values):
        return partition, tuple(values)
    return DyadicPartition._trusted(levels, indices), tuple(vals)


_TUPLE_OPS = {kernels.ADD: operator.add, kernels.SUB: operator.sub, kernels.MUL: operator.mul}


@dataclass(frozen=True)
class TupleElement(AlgebraElement):
    """Element of the algebra of rational functions on ``len(entries)`` points."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(exact(v) for v in self.entries)
        if not entries:
            raise ValueError("a tuple element needs at least one entry")
        object.__setattr__(self, "entries", entries)

    @property
    def size(self):
        return len(self.entries)

    def canonical(self):
        return self

    def check_compatible(self, other):
        if not isinstance(other, TupleElement):
            raise BackendMismatchError(f"cannot combine a tuple element with {type(other).__name__}")
        if other.size != self.size:
            raise BackendMismatchError(f"tuple sizes differ: {self.size} vs {other.size}")

    def zero_like(self):
        return TupleElement((Fraction(0),) * self.size)

    def one_like(self):
        return TupleElement((Fraction(1),) * self.size)

    def _pointwise(self, other, op):
        self.check_compatible(other)
        return TupleElement(tuple(_TUPLE_OPS[op](x, y) for x, y in zip(self.entries, other.entries)))

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._pointwise(other, kernels.ADD)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._pointwise(other, kernels.SUB)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._pointwise(other, kernels.MUL)

    def __neg__(self):
        return TupleElement(tuple(-x for x in self.entries))

    def scale(self, q):
        q = exact(q)
        return TupleElement(tuple(q * x for x in self.entries))

    def norm(self):
        return max(abs(x) for x in self.entries)

    def is_positive(self):
        return all(x >= 0 for x in self.entries)

    def integrate(self):
        return sum(self.entries, Fraction(0))


# -- module-level operations -------------------------------------------------


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a + b


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def adjoint(a: AlgebraElement) -> AlgebraElement:
    return a.adjoint()


def norm(a: AlgebraElement) -> Fraction:
    return a.norm()


def is_positive(a: AlgebraElement) -> bool:
    return a.is_positive()


def indicator(c: DyadicInterval) -> StepFunction:
    """Characteristic function of the cell ``c`` as a step function on Y."""
    if c.level == 0:
        return StepFunction.constant(1)
    # canonical form: the siblings along the ancestor chain carry 0, c carries 1
    cells = [(lv, (c.index >> (c.level - lv)) ^ 1, 0) for lv in range(1, c.level + 1)]
    cells.append((c.level, c.index, 1))
    cells.sort(key=lambda t: Fraction(t[1], 1 << t[0]))
    part = DyadicPartition._trusted(array("q", [t[0] for t in cells]), array("q", [t[1] for t in cells]))
    return StepFunction._from_canonical(part, tuple(t[2] for t in cells))


def sublevel_measure(a: StepFunction, t, relation: str = ">=") -> Fraction:
    """Lebesgue measure of ``{y : a(y) REL t}`` for REL in ``>=, >, <=, <``."""
    if relation not in _RELATIONS:
        raise ValueError(f"relation must be one of {sorted(_RELATIONS)}, got {relation!r}")
    if not isinstance(a, StepFunction):
        raise BackendMismatchError("sublevel_measure needs a step function")
    return a.sublevel_measure(t, relation)


def total(elements: Iterable[AlgebraElement]) -> AlgebraElement:
    """Sum of a non-empty collection, reduced pairwise to keep refinements small."""
    items = list(elements)
    if not items:
        raise ValueError("total() of an empty collection has no backend; pass at least one element")
    while len(items) > 1:
        nxt = [items[k] + items[k + 1] for k in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]
