"""Elementary A-valued functions on X = [0, 1) and their A-valued inner product.

An :class:`ElementaryFunction` is a finite sum ``sum_i a_i * chi(E_i)`` with
the ``E_i`` the cells of a dyadic partition of X and the ``a_i`` algebra
elements. The inner product

    <f, g> = sum_i adjoint(a_i) * b_i * mu(E_i)

is taken over the common refinement of the two domain partitions and is
itself an algebra element. The scalar module norm is
``norm(<f, f>) ** (1/2)``; only its exact square is used for comparisons.
"""

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import kernels
from .algebra import AlgebraElement, total
from .errors import DomainError
from .partition import DyadicPartition, common_refinement, make_uniform
from .rational import as_rational, sqrt_decimal

__all__ = [
    "ElementaryFunction",
    "ModuleNorm",
    "add",
    "eval_at",
    "inner_product",
    "module_norm",
    "module_norm_sq",
    "norm_sq_element",
    "scale_right",
    "subtract",
]


@dataclass(frozen=True)
class ElementaryFunction:
    domain_partition: DyadicPartition
    coefficients: tuple[AlgebraElement, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        if len(coeffs) != len(self.domain_partition):
            raise ValueError(f"{len(coeffs)} coefficients for {len(self.domain_partition)} cells")
        _check_backends(coeffs)
        part, coeffs = _canonicalize(self.domain_partition, tuple(c.canonical() for c in coeffs))
        object.__setattr__(self, "domain_partition", part)
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def raw(cls, domain_partition: DyadicPartition, coefficients: Sequence[AlgebraElement]):
        """Build without merging equal sibling cells (keeps the given representation)."""
        coeffs = tuple(coefficients)
        if len(coeffs) != len(domain_partition):
            raise ValueError(f"{len(coeffs)} coefficients for {len(domain_partition)} cells")
        _check_backends(coeffs)
        obj = object.__new__(cls)
        object.__setattr__(obj, "domain_partition", domain_partition)
        object.__setattr__(obj, "coefficients", coeffs)
        return obj

    @classmethod
    def constant(cls, a: AlgebraElement) -> "ElementaryFunction":
        return cls(make_uniform(0), (a,))

    def canonical(self) -> "ElementaryFunction":
        return ElementaryFunction(self.domain_partition, self.coefficients)

    def zero_like(self) -> "ElementaryFunction":
        return ElementaryFunction.constant(self.coefficients[0].zero_like())

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coefficients)

    def refined_to(self, partition: DyadicPartition) -> "ElementaryFunction":
        """Same function written on a finer ``partition`` (non-canonical)."""
        ref = common_refinement(self.domain_partition, partition)
        if ref.partition != partition:
            raise ValueError("target partition does not refine the domain partition")
        return ElementaryFunction.raw(partition, [self.coefficients[i] for i in ref.parent_p])

    def on_uniform(self, level: int) -> list[AlgebraElement]:
        """Coefficients on the cells of ``make_uniform(level)``."""
        if not self.domain_partition.is_refined_by(level):
            raise ValueError(f"domain partition is finer than level {level}")
        out = []
        for lv, a in zip(self.domain_partition.levels, self.coefficients):
            out.extend([a] * (1 << (level - lv)))
        return out

    def check_compatible(self, other: "ElementaryFunction"):
        self.coefficients[0].check_compatible(other.coefficients[0])

    def _cellwise(self, other, op):
        self.check_compatible(other)
        ref = common_refinement(self.domain_partition, other.domain_partition)
        a = self.coefficients
        b = other.coefficients
        return ElementaryFunction(ref.partition, [op(a[i], b[j]) for i, j in zip(ref.parent_p, ref.parent_q)])

    def __add__(self, other):
        if not isinstance(other, ElementaryFunction):
            return NotImplemented
        return self._cellwise(other, lambda x, y: x + y)

    def __sub__(self, other):
        if not isinstance(other, ElementaryFunction):
            return NotImplemented
        return self._cellwise(other, lambda x, y: x - y)

    def __neg__(self):
        return ElementaryFunction.raw(self.domain_partition, [-a for a in self.coefficients])

    def __call__(self, x):
        return eval_at(self, x)


def _check_backends(coeffs):
    if not coeffs:
        raise ValueError("an elementary function needs at least one cell")
    first = coeffs[0]
    if not isinstance(first, AlgebraElement):
        raise TypeError(f"coefficients must be algebra elements, got {type(first).__name__}")
    for c in coeffs[1:]:
        first.check_compatible(c)


def _canonicalize(partition, coeffs):
    if len(coeffs) == 1:
        return partition, coeffs
    levels, indices, vals = kernels.merge_siblings(partition.levels, partition.indices, list(coeffs))
    if len(vals) == len(coeffs):
        return partition, coeffs
    return DyadicPartition._trusted(levels, indices), tuple(vals)


def inner_product(f: ElementaryFunction, g: ElementaryFunction) -> AlgebraElement:
    f.check_compatible(g)
    ref = common_refinement(f.domain_partition, g.domain_partition)
    a = f.coefficients
    b = g.coefficients
    terms = [
        (a[i].adjoint() * b[j]).scale(m)
        for m, i, j in zip(ref.partition.measures, ref.parent_p, ref.parent_q)
    ]
    return total(terms).canonical()


def norm_sq_element(f: ElementaryFunction) -> AlgebraElement:
    """The A-valued square ``<f, f>``."""
    return inner_product(f, f)


def module_norm_sq(f: ElementaryFunction) -> Fraction:
    return norm_sq_element(f).norm()


class ModuleNorm(NamedTuple):
    square: Fraction
    approx: Decimal


def module_norm(f: ElementaryFunction, digits: int = 20) -> ModuleNorm:
    """Scalar norm as (exact square, decimal approximation of the root)."""
    sq = module_norm_sq(f)
    return ModuleNorm(sq, sqrt_decimal(sq, digits))


def add(f: ElementaryFunction, g: ElementaryFunction) -> ElementaryFunction:
    return f + g


def subtract(f: ElementaryFunction, g: ElementaryFunction) -> ElementaryFunction:
    return f - g


def scale_right(f: ElementaryFunction, a: AlgebraElement) -> ElementaryFunction:
    """Right module action: every coefficient multiplied on the right by ``a``."""
    f.coefficients[0].check_compatible(a)
    return ElementaryFunction(f.domain_partition, [c * a for c in f.coefficients])


def eval_at(f: ElementaryFunction, x) -> AlgebraElement:
    """Coefficient of the cell of X containing ``x``."""
    x = as_rational(x)
    if not 0 <= x < 1:
        raise DomainError(f"x = {x} is outside [0, 1)")
    return f.coefficients[f.domain_partition.locate(x)]
