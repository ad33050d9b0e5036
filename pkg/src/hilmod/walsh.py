"""Walsh functions in Paley order and exact expansion of elementary functions.

``walsh(m, k)`` takes the value ``(-1) ** popcount(k & i)`` on cell ``i`` of
the uniform level-m partition. These ``2**m`` functions are orthonormal in
L2[0, 1) and span the step functions of level m, so an elementary A-valued
function on a level-m partition has coefficients

    c_k = 2**-m * sum_i w_k(i) * a_i

and ``sum_k c_k* c_k == <f, f>`` exactly.
"""

from fractions import Fraction
from typing import NamedTuple, Sequence

from . import kernels
from .algebra import AlgebraElement, StepFunction, total
from .errors import DomainError
from .hilbert_module import ElementaryFunction, norm_sq_element
from .partition import make_uniform

__all__ = ["ParsevalResult", "expand", "parseval_check", "reconstruct", "walsh", "walsh_sign"]


def walsh_sign(k: int, i: int) -> int:
    return -1 if bin(k & i).count("1") & 1 else 1


def walsh(m: int, k: int) -> StepFunction:
    if m < 0:
        raise DomainError(f"level must be nonnegative, got {m}")
    if not 0 <= k < (1 << m):
        raise DomainError(f"index {k} out of range for level {m}")
    return StepFunction(make_uniform(m), [walsh_sign(k, i) for i in range(1 << m)])


def _coefficients_on_level(f: ElementaryFunction, m: int):
    if not f.domain_partition.is_refined_by(m):
        raise DomainError(f"domain partition of f is finer than Walsh level {m}")
    return f.on_uniform(m)


def expand(f: ElementaryFunction, m: int) -> list[AlgebraElement]:
    """The ``2**m`` Walsh coefficients of ``f`` (algebra elements)."""
    values = _coefficients_on_level(f, m)
    kernels.fwht(values)
    scale = Fraction(1, 1 << m)
    return [c.scale(scale).canonical() for c in values]


def reconstruct(coefficients: Sequence[AlgebraElement], m: int) -> ElementaryFunction:
    """Inverse of :func:`expand`: cell values ``a_i = sum_k w_k(i) * c_k``."""
    coeffs = list(coefficients)
    if len(coeffs) != 1 << m:
        raise DomainError(f"need {1 << m} coefficients for level {m}, got {len(coeffs)}")
    kernels.fwht(coeffs)
    return ElementaryFunction(make_uniform(m), [c.canonical() for c in coeffs])


class ParsevalResult(NamedTuple):
    lhs: AlgebraElement
    rhs: AlgebraElement
    equal: bool


def parseval_check(f: ElementaryFunction, m: int) -> ParsevalResult:
    """Compare ``sum_k adjoint(c_k) * c_k`` with ``<f, f>``."""
    coeffs = expand(f, m)
    squares = [c.adjoint() * c for c in coeffs]
    lhs = total(squares).canonical()
    rhs = norm_sq_element(f)
    return ParsevalResult(lhs, rhs, lhs == rhs)
