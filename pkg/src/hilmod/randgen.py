"""Seeded random generators for exact objects.

Every generator takes a :class:`random.Random` instance; identical seeds give
identical corpora under this implementation.
"""

import random
from fractions import Fraction

from .algebra import StepFunction, TupleElement
from .functional import PositiveFunctional
from .hilbert_module import ElementaryFunction
from .partition import DyadicInterval, DyadicPartition

__all__ = [
    "random_elementary",
    "random_partition",
    "random_rational",
    "random_state",
    "random_step",
    "random_tuple",
]


def random_rational(rng: random.Random, bound: int = 100, nonnegative: bool = False) -> Fraction:
    num = rng.randint(0 if nonnegative else -bound, bound)
    return Fraction(num, rng.randint(1, bound))


def random_partition(rng: random.Random, max_level: int, split_prob: float = 0.55) -> DyadicPartition:
    """Random dyadic partition: each cell above ``max_level`` splits with ``split_prob``."""
    cells = []
    stack = [DyadicInterval(0, 0)]
    while stack:
        c = stack.pop()
        if c.level < max_level and rng.random() < split_prob:
            left, right = c.children()
            stack.append(right)
            stack.append(left)
        else:
            cells.append(c)
    return DyadicPartition(tuple(cells))


def random_step(rng: random.Random, max_level: int = 4, bound: int = 100, nonnegative: bool = False) -> StepFunction:
    part = random_partition(rng, max_level)
    # small value pool so that sibling merges actually occur
    pool = [random_rational(rng, bound, nonnegative) for _ in range(3)]
    vals = [
        rng.choice(pool) if rng.random() < 0.3 else random_rational(rng, bound, nonnegative)
        for _ in part
    ]
    return StepFunction(part, vals)


def random_tuple(rng: random.Random, size: int, bound: int = 100, nonnegative: bool = False) -> TupleElement:
    return TupleElement(tuple(random_rational(rng, bound, nonnegative) for _ in range(size)))


def random_elementary(
    rng: random.Random,
    max_level: int = 4,
    coeff_level: int = 3,
    bound: int = 20,
    backend: str = "step",
    tuple_size: int = 4,
) -> ElementaryFunction:
    part = random_partition(rng, max_level)
    if backend == "step":
        coeffs = [random_step(rng, coeff_level, bound) for _ in part]
    elif backend == "tuple":
        coeffs = [random_tuple(rng, tuple_size, bound) for _ in part]
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return ElementaryFunction(part, coeffs)


def random_state(rng: random.Random, max_level: int = 3, bound: int = 20, max_mass: Fraction = Fraction(1)) -> PositiveFunctional:
    """Positive functional on the step backend with mass in ``(0, max_mass]``."""
    density = random_step(rng, max_level, bound, nonnegative=True)
    mass = density.integrate()
    if mass == 0:
        density = StepFunction.constant(1)
        mass = Fraction(1)
    target = max_mass * Fraction(rng.randint(1, bound), bound)
    return PositiveFunctional(density.scale(target / mass))
