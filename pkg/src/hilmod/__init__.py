"""Exact computations with elementary functions in the Hilbert module L2(X; A).

X = Y = [0, 1) with Lebesgue measure; A is a commutative algebra of rational
step functions on Y (or rational tuples). All arithmetic is over
:class:`fractions.Fraction`.
"""

from . import kernels
from .algebra import StepFunction, TupleElement, indicator, sublevel_measure
from .counterexample import blowup_measure, cauchy_report, generate, pointwise_sup, successive_diff_gram
from .functional import PositiveFunctional, apply, estimate_chain, extend, l2_norm_sq, lebesgue_state
from .hilbert_module import (
    ElementaryFunction,
    eval_at,
    inner_product,
    module_norm,
    module_norm_sq,
    norm_sq_element,
    scale_right,
)
from .partition import DyadicInterval, DyadicPartition, cell_measure, common_refinement, make_uniform, validate
from .walsh import expand, parseval_check, reconstruct, walsh

__version__ = "0.1.0"
