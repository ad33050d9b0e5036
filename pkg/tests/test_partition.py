from fractions import Fraction

import pytest
from hypothesis import given, settings

from hilmod.config import limits
from hilmod.errors import GapError, OverlapError, ResourceLimitError, UnsortedError
from hilmod.partition import (
    DyadicInterval,
    DyadicPartition,
    cell_measure,
    common_refinement,
    make_uniform,
    validate,
)
from strategies import partitions

half = Fraction(1, 2)
quarter = Fraction(1, 4)


def I(level, index):
    return DyadicInterval(level, index)


class TestMakeUniform:
    def test_level_zero_is_whole_space(self):
        assert make_uniform(0).cells == (I(0, 0),)

    def test_level_one_halves(self):
        p = make_uniform(1)
        assert [(c.left, c.right) for c in p] == [(0, half), (half, 1)]

    def test_level_three(self):
        p = make_uniform(3)
        assert len(p) == 8
        assert all(cell_measure(c) == Fraction(1, 8) for c in p)

    def test_above_cap(self):
        with pytest.raises(ResourceLimitError):
            make_uniform(31)

    def test_cap_is_configurable(self):
        old = limits.max_partition_level
        limits.max_partition_level = 3
        try:
            with pytest.raises(ResourceLimitError):
                make_uniform(4)
        finally:
            limits.max_partition_level = old

    @pytest.mark.parametrize("k", range(0, 9))
    def test_count_and_measure(self, k):
        p = make_uniform(k)
        assert len(p) == 2**k
        assert {cell_measure(c) for c in p} == {Fraction(1, 2**k)}
        assert validate(p).ok


class TestValidate:
    def test_valid(self):
        assert validate([I(1, 0), I(1, 1)]).ok

    def test_overlap(self):
        res = validate([I(1, 0), I(2, 1), I(1, 1)])
        assert not res.ok and isinstance(res.error, OverlapError)

    def test_gap(self):
        res = validate([I(1, 0)])
        assert not res.ok and isinstance(res.error, GapError)
        assert "1/2" in str(res.error)

    def test_interior_gap(self):
        res = validate([I(2, 0), I(1, 1)])
        assert isinstance(res.error, GapError)

    def test_unsorted(self):
        res = validate([I(1, 1), I(1, 0)])
        assert isinstance(res.error, UnsortedError)

    def test_constructor_raises_first_violation(self):
        with pytest.raises(OverlapError):
            DyadicPartition([I(1, 0), I(2, 1), I(1, 1)])
        with pytest.raises(GapError):
            DyadicPartition([])

    def test_bad_index(self):
        with pytest.raises(ValueError):
            I(2, 4)
        with pytest.raises(ValueError):
            I(-1, 0)


class TestCellMeasure:
    def test_examples(self):
        assert cell_measure(I(0, 0)) == 1
        assert cell_measure(I(3, 5)) == Fraction(1, 8)
        assert {cell_measure(I(10, i)) for i in (0, 17, 1023)} == {Fraction(1, 1024)}

    @given(partitions(8))
    def test_total_measure_is_one(self, p):
        assert sum(cell_measure(c) for c in p) == 1


def brute_refinement(p, q):
    cells = []
    for c in p:
        for d in q:
            lo, hi = max(c.left, d.left), min(c.right, d.right)
            if lo < hi:
                cells.append((lo, hi))
    return sorted(cells)


class TestCommonRefinement:
    def test_nested_uniform(self):
        assert common_refinement(make_uniform(1), make_uniform(2)).partition == make_uniform(2)

    def test_idempotent_example(self):
        p = DyadicPartition([I(2, 0), I(2, 1), I(1, 1)])
        assert common_refinement(p, p).partition == p

    def test_non_uniform_against_brute_force(self):
        p = make_uniform(1)
        q = DyadicPartition([I(2, 0), I(2, 1), I(2, 2), I(3, 6), I(3, 7)])
        ref = common_refinement(p, q)
        assert [(c.left, c.right) for c in ref.partition] == brute_refinement(p, q)
        assert list(ref.parent_p) == [0, 0, 1, 1, 1]
        assert list(ref.parent_q) == [0, 1, 2, 3, 4]

    @settings(max_examples=200, deadline=None)
    @given(partitions(7), partitions(7))
    def test_properties(self, p, q):
        ref = common_refinement(p, q)
        assert [(c.left, c.right) for c in ref.partition] == brute_refinement(p, q)
        assert ref.partition == common_refinement(q, p).partition
        for r, i, j in zip(ref.partition, ref.parent_p, ref.parent_q):
            assert p[i].left <= r.left and r.right <= p[i].right
            assert q[j].left <= r.left and r.right <= q[j].right
            assert p[i].contains(r) and q[j].contains(r)

    @given(partitions(7))
    def test_idempotent(self, p):
        assert common_refinement(p, p).partition == p


def test_locate():
    p = DyadicPartition([I(2, 0), I(2, 1), I(1, 1)])
    assert p.locate(0) == 0
    assert p.locate(Fraction(3, 10)) == 1
    assert p.locate(Fraction(1, 2)) == 2
    with pytest.raises(ValueError):
        p.locate(1)


def test_equality_and_hash_are_structural():
    a = DyadicPartition([I(1, 0), I(1, 1)])
    b = make_uniform(1)
    assert a == b and hash(a) == hash(b)
    assert a != make_uniform(2)
