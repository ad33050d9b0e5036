from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hilmod import counterexample as ce
from hilmod.algebra import StepFunction, indicator
from hilmod.errors import DomainError, ResourceLimitError
from hilmod.hilbert_module import module_norm_sq
from hilmod.partition import DyadicInterval, make_uniform

GRID = 8


def brute_grid(n, level=GRID):
    """f_n sampled on a level x level grid of X x Y, by the recursion alone."""
    size = 1 << level
    g = [[1] * size for _ in range(size)]
    for k in range(1, n):
        shift = level - k
        for x in range(size):
            row = g[x]
            for y in range(size):
                if x >> shift == y >> shift:
                    row[y] += 1
    return g


@pytest.mark.parametrize("n", range(1, GRID + 1))
def test_generate_matches_brute_grid(n):
    f = ce.generate(n)
    grid = brute_grid(n)
    size = 1 << GRID
    for x in range(size):
        a = f(Fraction(x, size)).on_uniform(GRID)
        assert a == grid[x]


def test_first_terms():
    one = StepFunction.constant(1)
    assert ce.generate(1).coefficients == (one,)
    f2 = ce.generate(2)
    assert f2.domain_partition == make_uniform(1)
    assert f2.coefficients == (one + indicator(DyadicInterval(1, 0)), one + indicator(DyadicInterval(1, 1)))
    f3 = ce.generate(3)
    # third cell of level 2 has parent cell 2 of level 1
    assert f3.coefficients[2] == f2.coefficients[1] + indicator(DyadicInterval(2, 2))


def test_iterate_sequence_agrees_with_generate():
    for n, f in enumerate(ce.iterate_sequence(6), start=1):
        assert f == ce.generate(n)


def test_build_cache_order_independent():
    ce._CACHE.clear()
    late = ce.generate(7)
    ce._CACHE.clear()
    for n in (2, 5, 3):
        ce.generate(n)
    assert ce.generate(7) == late


@pytest.mark.parametrize("n", range(1, 11))
def test_diff_gram(n):
    assert ce.successive_diff_gram(n) == StepFunction.constant(Fraction(1, 2**n))


def test_grid_diff_gram_oracle():
    # <f_{n+1} - f_n, same>(y) as a plain mean over the x grid
    size = 1 << GRID
    for n in range(1, GRID):
        a, b = brute_grid(n), brute_grid(n + 1)
        for y in range(0, size, 17):
            s = sum((b[x][y] - a[x][y]) ** 2 for x in range(size))
            assert Fraction(s, size) == Fraction(1, 2**n)


@pytest.mark.parametrize("n", range(1, 9))
def test_blowup_and_sup_every_cell(n):
    for cell in ce.generate(n).domain_partition:
        for x in (cell.left, cell.left + cell.measure / 3):
            assert ce.blowup_measure(n, x) == Fraction(2, 2**n)
            assert ce.pointwise_sup(n, x) == n


def test_blowup_brute_grid():
    size = 1 << GRID
    for n in range(1, GRID + 1):
        g = brute_grid(n)
        for x in range(0, size, 13):
            assert Fraction(sum(v >= n for v in g[x]), size) == Fraction(2, 2**n)
            assert max(g[x]) == n


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 10), st.fractions(0, 1).filter(lambda q: q < 1))
def test_blowup_any_point(n, x):
    assert ce.blowup_measure(n, x) == Fraction(2, 2**n)
    assert ce.pointwise_sup(n, x) == n


def test_sup_strictly_increasing():
    x = Fraction(5, 7)
    sups = [ce.pointwise_sup(n, x) for n in range(1, 10)]
    assert sups == sorted(set(sups))


class TestTail:
    @pytest.mark.parametrize("n,m", [(1, 2), (1, 5), (2, 4), (3, 9), (5, 6)])
    def test_closed_form_matches(self, n, m):
        assert module_norm_sq(ce.generate(m) - ce.generate(n)) == ce.tail_closed_form(n, m)

    def test_adjacent_is_diff(self):
        for n in range(1, 8):
            assert ce.tail_closed_form(n, n + 1) == Fraction(1, 2**n)

    @given(st.integers(1, 30), st.integers(1, 40))
    def test_bound(self, n, extra):
        assert ce.tail_closed_form(n, n + extra) < Fraction(6, 2**n)


class TestReport:
    def test_rows(self):
        rows = ce.cauchy_report(6)
        assert [r.n for r in rows] == list(range(1, 7))
        for r in rows:
            assert r.passed, r
            assert r.diff_gram_norm == Fraction(1, 2**r.n)
            assert r.blowup_measure == Fraction(2, 2**r.n)
            assert r.pointwise_sup == r.n
            assert r.tail and r.tail_ok

    def test_without_tail(self):
        rows = ce.cauchy_report(3, check_tail=False)
        assert all(r.passed and not r.tail for r in rows)


class TestLimits:
    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            ce.generate(17)
        with pytest.raises(ResourceLimitError):
            ce.generate(0)
        with pytest.raises(TypeError):
            ce.generate(2.0)

    def test_cap_override(self, monkeypatch):
        monkeypatch.setenv("HILMOD_MAX_LEVEL", "4")
        with pytest.raises(ResourceLimitError):
            ce.generate(5)
        assert ce.generate(4).domain_partition == make_uniform(3)

    def test_domain(self):
        with pytest.raises(DomainError):
            ce.blowup_measure(3, 1)
        with pytest.raises(DomainError):
            ce.pointwise_sup(3, Fraction(-1, 2))


def test_cache_keeps_recent_small_terms():
    ce._CACHE.clear()
    ce.generate(9)
    ce.generate(2)
    assert 2 in ce._CACHE and 9 in ce._CACHE
