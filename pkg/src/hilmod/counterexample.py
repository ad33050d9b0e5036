"""The sequence f_n with A = L-infinity(Y): Cauchy in the module, divergent pointwise.

``f_1`` is the constant ``one``. ``f_{n+1}`` lives on the dyadic level-n
partition of X; on cell ``E_{n+1,j}`` (1-based ``j``) it equals the value of
``f_n`` on the parent cell ``E_{n,i}``, ``i = ceil(j / 2)``, plus the indicator
of the interval ``E_{n+1,j}`` taken as a subset of Y.

Closed forms checked here, all exact:

* ``<f_{n+1} - f_n, f_{n+1} - f_n> = 2**-n * one``
* ``mu{y : f_n(x)(y) >= n} = 2**(1 - n)`` for every x
* ``norm(f_n(x)) = n`` for every x
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .algebra import StepFunction, indicator, sublevel_measure
from .config import sequence_cap
from .errors import DomainError, ResourceLimitError, VerificationError
from .hilbert_module import ElementaryFunction, eval_at, module_norm_sq, norm_sq_element
from .partition import make_uniform
from .rational import as_rational

__all__ = [
    "CounterexampleRow",
    "blowup_measure",
    "cauchy_report",
    "generate",
    "iterate_sequence",
    "pointwise_sup",
    "successive_diff_gram",
    "tail_closed_form",
]


def _check_n(n, cap=None):
    cap = sequence_cap() if cap is None else cap
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an integer, got {n!r}")
    if not 1 <= n <= cap:
        raise ResourceLimitError(f"n = {n} outside the allowed range 1..{cap}")


def _step(f_n: ElementaryFunction, n: int) -> ElementaryFunction:
    level = n  # f_{n+1} lives on make_uniform(n)
    part = make_uniform(level)
    parents = f_n.on_uniform(n - 1)
    coeffs = [parents[j >> 1] + indicator(cell) for j, cell in enumerate(part)]
    return ElementaryFunction(part, coeffs)


def iterate_sequence(n_max: int) -> Iterator[ElementaryFunction]:
    """Yield ``f_1, ..., f_{n_max}`` in order, each built from its predecessor."""
    f = ElementaryFunction.constant(StepFunction.constant(1))
    yield f
    for n in range(1, n_max):
        f = _step(f, n)
        yield f


# least recently used terms are evicted first; a miss is rebuilt from the
# nearest cached predecessor
_CACHE: dict[int, ElementaryFunction] = {}
_CACHE_SIZE = 4


def _build(n):
    if n in _CACHE:
        _CACHE[n] = _CACHE.pop(n)
        return _CACHE[n]
    start = max((k for k in _CACHE if k < n), default=None)
    if start is None:
        f = ElementaryFunction.constant(StepFunction.constant(1))
        start = 1
    else:
        f = _CACHE[start]
    for k in range(start, n):
        f = _step(f, k)
    _CACHE[n] = f
    while len(_CACHE) > _CACHE_SIZE:
        del _CACHE[next(iter(_CACHE))]
    return f


def generate(n: int) -> ElementaryFunction:
    """``f_n`` on the uniform level-(n-1) partition of X."""
    _check_n(n)
    return _build(n)


def _diff_gram(f_n, f_next, n):
    gram = norm_sq_element(f_next - f_n)
    expected = StepFunction.constant(Fraction(1, 1 << n))
    if gram != expected:
        raise VerificationError(f"<f_{n+1} - f_{n}, same> = {gram!r}, expected constant 2^-{n}")
    return gram


def successive_diff_gram(n: int) -> StepFunction:
    """``<f_{n+1} - f_n, f_{n+1} - f_n>``; always the constant ``2**-n``.

    ``n`` may equal the cap; ``f_{n+1}`` is then built one step past it.
    """
    _check_n(n)
    return _diff_gram(_build(n), _build(n + 1), n)


def _check_x(x):
    x = as_rational(x)
    if not 0 <= x < 1:
        raise DomainError(f"x = {x} is outside [0, 1)")
    return x


def _blowup(f_n, n, x):
    got = sublevel_measure(eval_at(f_n, x), n, ">=")
    if got != Fraction(2, 1 << n):
        raise VerificationError(f"blowup measure at n={n}, x={x} is {got}, expected 2^(1-{n})")
    return got


def _sup(f_n, n, x):
    got = eval_at(f_n, x).norm()
    if got != n:
        raise VerificationError(f"sup norm of f_{n}({x}) is {got}, expected {n}")
    return got


def blowup_measure(n: int, x) -> Fraction:
    """``mu{y : f_n(x)(y) >= n}``; equals ``2**(1 - n)`` for every x."""
    _check_n(n)
    x = _check_x(x)
    return _blowup(_build(n), n, x)


def pointwise_sup(n: int, x) -> Fraction:
    """Sup norm of the algebra element ``f_n(x)``; equals ``n``."""
    _check_n(n)
    x = _check_x(x)
    return _sup(_build(n), n, x)


def tail_closed_form(n: int, m: int) -> Fraction:
    """Exact value of ``norm(<f_m - f_n, f_m - f_n>)`` for ``m > n``.

    On each cell ``f_m - f_n`` is a sum of the nested indicators of levels
    ``n .. m-1``, and the Gram element is the constant
    ``sum_{k, l in [n, m)} 2**-max(k, l)``. It is below ``6 * 2**-n`` for all m.
    """
    return sum(
        (Fraction(1, 1 << max(k, l)) for k in range(n, m) for l in range(n, m)),
        Fraction(0),
    )


@dataclass
class CounterexampleRow:
    n: int
    diff_gram: StepFunction
    diff_gram_norm: Fraction
    blowup_measure: Fraction
    pointwise_sup: Fraction
    all_cells_checked: bool
    tail: dict = field(default_factory=dict)
    tail_ok: bool = True

    @property
    def expected_diff(self):
        return Fraction(1, 1 << self.n)

    @property
    def expected_blowup(self):
        return Fraction(2, 1 << self.n)

    @property
    def passed(self):
        return (
            self.all_cells_checked
            and self.tail_ok
            and self.diff_gram_norm == self.expected_diff
            and self.blowup_measure == self.expected_blowup
            and self.pointwise_sup == self.n
        )


def _tail_targets(n, n_last):
    return sorted({m for m in (n + 1, n + 2, n_last) if n < m <= n_last})


def cauchy_report(max_n: int, *, check_tail: bool = True) -> list[CounterexampleRow]:
    """One exact row per ``n <= max_n``; every cell of ``f_n`` is probed.

    The tail check compares ``module_norm_sq(f_m - f_n)`` for a few
    ``m > n`` against :func:`tail_closed_form` and the bound ``6 * 2**-n``.
    """
    _check_n(max_n)
    seq = list(iterate_sequence(max_n + 1))
    n_last = max_n + 1
    rows = []
    for n in range(1, max_n + 1):
        f_n = seq[n - 1]
        gram = _diff_gram(f_n, seq[n], n)
        ok = True
        blow = sup = None
        for cell in f_n.domain_partition:
            x = cell.left
            try:
                b = _blowup(f_n, n, x)
                s = _sup(f_n, n, x)
            except VerificationError:
                ok = False
                continue
            blow = b if blow is None else blow
            sup = s if sup is None else sup
        tail = {}
        tail_ok = True
        if check_tail:
            bound = Fraction(6, 1 << n)
            for m in _tail_targets(n, n_last):
                got = module_norm_sq(seq[m - 1] - f_n)
                tail[m] = got
                tail_ok = tail_ok and got == tail_closed_form(n, m) and got < bound
        rows.append(
            CounterexampleRow(
                n=n,
                diff_gram=gram,
                diff_gram_norm=gram.norm(),
                blowup_measure=blow if blow is not None else Fraction(0),
                pointwise_sup=sup if sup is not None else Fraction(0),
                all_cells_checked=ok,
                tail=tail,
                tail_ok=tail_ok,
            )
        )
    return rows
