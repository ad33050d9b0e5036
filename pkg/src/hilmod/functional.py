"""Positive functionals on A and their cellwise extension to elementary functions.

A positive functional is given by a nonnegative density ``d`` in the same
backend: ``phi(a) = integrate(d * a)``. For step functions that is the
Lebesgue integral over Y, for tuples a weighted sum. Its norm is its mass
``phi(one)``.

Extending ``phi`` cellwise sends ``f = sum a_i chi(E_i)`` to the scalar step
function ``sum phi(a_i) chi(E_i)`` on X, and

    ||phi~(f)||^2 <= mass * phi(<f, f>)  and  phi(<f, f>) <= mass * ||f||^2.

With mass at most 1 these give ``||phi~(f)||^2 <= phi(<f, f>) <= ||f||^2``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .algebra import AlgebraElement, StepFunction, TupleElement
from .errors import HilmodError
from .hilbert_module import ElementaryFunction, module_norm_sq, norm_sq_element

__all__ = [
    "ChainResult",
    "PositiveFunctional",
    "apply",
    "estimate_chain",
    "extend",
    "l2_norm_sq",
    "lebesgue_state",
]


class NotPositiveError(HilmodError, ValueError):
    pass


@dataclass(frozen=True)
class PositiveFunctional:
    density: AlgebraElement
    mass: Optional[Fraction] = None

    def __post_init__(self):
        density = self.density.canonical()
        if not density.is_positive():
            raise NotPositiveError("functional density must be nonnegative")
        object.__setattr__(self, "density", density)
        mass = density.integrate()
        if self.mass is not None and Fraction(self.mass) != mass:
            raise ValueError(f"stated mass {self.mass} does not match the density's mass {mass}")
        object.__setattr__(self, "mass", mass)

    @property
    def is_state(self) -> bool:
        return self.mass == 1

    def __call__(self, a: AlgebraElement) -> Fraction:
        return apply(self, a)


def lebesgue_state(like: Optional[AlgebraElement] = None) -> PositiveFunctional:
    """Normalised reference measure: density 1 on Y, or uniform weights on a tuple."""
    if like is None or isinstance(like, StepFunction):
        return PositiveFunctional(StepFunction.constant(1))
    if isinstance(like, TupleElement):
        return PositiveFunctional(TupleElement((Fraction(1, like.size),) * like.size))
    raise TypeError(f"no reference state for {type(like).__name__}")


def apply(phi: PositiveFunctional, a: AlgebraElement) -> Fraction:
    phi.density.check_compatible(a)
    return (phi.density * a).integrate()


def extend(phi: PositiveFunctional, f: ElementaryFunction) -> StepFunction:
    """Scalar step function on X with value ``phi(a_i)`` on the i-th cell of f."""
    return StepFunction(f.domain_partition, [apply(phi, a) for a in f.coefficients])


def l2_norm_sq(s: StepFunction) -> Fraction:
    return (s * s).integrate()


class ChainResult(NamedTuple):
    lhs: Fraction
    mid: Fraction
    rhs: Fraction
    mass: Fraction
    form: str
    chain_holds: bool


def estimate_chain(phi: PositiveFunctional, f: ElementaryFunction) -> ChainResult:
    """Evaluate ``||phi~(f)||^2``, ``phi(<f, f>)`` and ``||f||^2`` and compare them.

    ``form`` is ``"literal"`` when mass <= 1, where ``lhs <= mid <= rhs`` is
    also required; otherwise ``"mass-corrected"``, checking only the
    inequalities carrying the factor ``mass``.
    """
    lhs = l2_norm_sq(extend(phi, f))
    mid = apply(phi, norm_sq_element(f))
    rhs = module_norm_sq(f)
    mass = phi.mass
    holds = lhs <= mass * mid and mid <= mass * rhs
    if mass <= 1:
        form = "literal"
        holds = holds and lhs <= mid <= rhs
    else:
        form = "mass-corrected"
    return ChainResult(lhs, mid, rhs, mass, form, holds)
