from fractions import Fraction

from hypothesis import strategies as st

from hilmod.algebra import StepFunction, TupleElement
from hilmod.hilbert_module import ElementaryFunction
from hilmod.partition import DyadicInterval, DyadicPartition

rationals = st.builds(Fraction, st.integers(-100, 100), st.integers(1, 100))
nonneg_rationals = st.builds(Fraction, st.integers(0, 100), st.integers(1, 100))


@st.composite
def partitions(draw, max_level=5):
    cells = []
    stack = [DyadicInterval(0, 0)]
    while stack:
        c = stack.pop()
        if c.level < max_level and draw(st.booleans()):
            left, right = c.children()
            stack.extend([right, left])
        else:
            cells.append(c)
    return DyadicPartition(tuple(cells))


@st.composite
def steps(draw, max_level=4, values=rationals):
    part = draw(partitions(max_level))
    # a small pool makes equal neighbours, and so sibling merges, likely
    pool = draw(st.lists(values, min_size=1, max_size=3))
    vals = [draw(st.sampled_from(pool) | values) for _ in part]
    return StepFunction(part, vals)


def tuples(size):
    return st.lists(rationals, min_size=size, max_size=size).map(lambda xs: TupleElement(tuple(xs)))


@st.composite
def elementaries(draw, max_level=3, coeff_level=3):
    part = draw(partitions(max_level))
    pool = draw(st.lists(steps(coeff_level), min_size=1, max_size=2))
    coeffs = [draw(st.sampled_from(pool) | steps(coeff_level)) for _ in part]
    return ElementaryFunction(part, coeffs)
