"""Seeded verification suites behind the CLI subcommands.

Each runner returns a list of flat row dicts whose values are strings,
integers or booleans; rationals appear as ``"p/q"``.
"""

import random
from fractions import Fraction

from . import algebra as alg
from .algebra import StepFunction, indicator
from .counterexample import cauchy_report
from .functional import estimate_chain, lebesgue_state
from .hilbert_module import ElementaryFunction, inner_product, module_norm_sq, norm_sq_element, scale_right
from .partition import DyadicInterval, DyadicPartition, make_uniform
from .randgen import random_elementary, random_state, random_step, random_tuple
from .rational import format_rational as fmt
from .walsh import expand, parseval_check, reconstruct


def example_rows(max_n):
    rows = []
    for r in cauchy_report(max_n):
        rows.append(
            {
                "n": r.n,
                "diff_gram_norm": fmt(r.diff_gram_norm),
                "expected_diff": fmt(r.expected_diff),
                "blowup_measure": fmt(r.blowup_measure),
                "expected_blowup": fmt(r.expected_blowup),
                "pointwise_sup": fmt(r.pointwise_sup),
                "expected_sup": fmt(r.n),
                "cells_checked": 1 << (r.n - 1),
                "all_cells_ok": r.all_cells_checked,
                "tail_ok": r.tail_ok,
                "passed": r.passed,
            }
        )
    return rows


def walsh_rows(level, cases, seed):
    rng = random.Random(seed)
    rows = []
    for case in range(cases):
        f = random_elementary(rng, max_level=level, coeff_level=min(level, 4) + 1)
        coeffs = expand(f, level)
        back = reconstruct(coeffs, level)
        par = parseval_check(f, level)
        roundtrip = back == f
        rows.append(
            {
                "case": case,
                "level": level,
                "cells": len(f.domain_partition),
                "roundtrip": roundtrip,
                "parseval_norm": fmt(par.rhs.norm()),
                "parseval_equal": par.equal,
                "passed": roundtrip and par.equal,
            }
        )
    return rows


def delta1():
    """``f_2 - f_1``: the indicator of ``[0, 1/2)`` on the left half of X, of ``[1/2, 1)`` on the right."""
    return ElementaryFunction(make_uniform(1), [indicator(DyadicInterval(1, 0)), indicator(DyadicInterval(1, 1))])


FIXTURES = {
    "one": lambda: (lebesgue_state(), ElementaryFunction.constant(StepFunction.constant(1))),
    "delta1": lambda: (lebesgue_state(), delta1()),
}


def _chain_row(case, phi, f):
    res = estimate_chain(phi, f)
    return {
        "case": case,
        "mass": fmt(res.mass),
        "form": res.form,
        "lhs": fmt(res.lhs),
        "mid": fmt(res.mid),
        "rhs": fmt(res.rhs),
        "passed": res.chain_holds,
    }


def functional_rows(cases, seed, fixture=None, max_mass=Fraction(1)):
    if fixture is not None:
        phi, f = FIXTURES[fixture]()
        return [_chain_row(0, phi, f)]
    rng = random.Random(seed)
    rows = []
    for case in range(cases):
        phi = random_state(rng, max_level=4, max_mass=max_mass)
        f = random_elementary(rng, max_level=rng.randint(0, 6), coeff_level=4, bound=10)
        rows.append(_chain_row(case, phi, f))
    return rows


# -- axiom suite -----------------------------------------------------------


def brute_inner_product(f, g, x_level=None, y_level=None):
    """Inner product by brute force on uniform grids of X and Y.

    Returns the list of values of ``<f, g>`` on the cells of
    ``make_uniform(y_level)``. Uses neither common refinement nor step
    function arithmetic.
    """
    if x_level is None:
        x_level = max(f.domain_partition.depth, g.domain_partition.depth)
    if y_level is None:
        y_level = max(c.partition.depth for c in f.coefficients + g.coefficients)
    fa = [c.on_uniform(y_level) for c in f.on_uniform(x_level)]
    gb = [c.on_uniform(y_level) for c in g.on_uniform(x_level)]
    w = Fraction(1, 1 << x_level)
    out = []
    for y in range(1 << y_level):
        out.append(w * sum((a[y] * b[y] for a, b in zip(fa, gb)), Fraction(0)))
    return out


def _random_refinement(rng, f):
    """``f`` written non-canonically on a random partition finer than its own."""
    cells = []
    for c in f.domain_partition:
        stack = [c]
        while stack:
            d = stack.pop()
            if d.level < c.level + 2 and rng.random() < 0.5:
                left, right = d.children()
                stack.extend([right, left])
            else:
                cells.append(d)
    return f.refined_to(DyadicPartition(tuple(cells)))


def _raw_step_refinement(rng, a):
    cells = []
    values = []
    for c, v in zip(a.partition, a.values):
        if rng.random() < 0.5:
            for d in c.children():
                cells.append(d)
                values.append(v)
        else:
            cells.append(c)
            values.append(v)
    return StepFunction.raw(DyadicPartition(tuple(cells)), values)


def _ax_c_star(rng):
    a = random_step(rng, 8)
    return alg.norm(alg.multiply(a, a)) == alg.norm(a) ** 2


def _ax_positivity_closure(rng):
    a = random_step(rng, 6, nonnegative=True)
    b = random_step(rng, 6, nonnegative=True)
    return a.is_positive() and b.is_positive() and (a + b).is_positive() and (a * b).is_positive()


def _ax_norm_bounds(rng):
    a = random_step(rng, 6)
    b = random_step(rng, 6)
    return (a * b).norm() <= a.norm() * b.norm() and (a + b).norm() <= a.norm() + b.norm()


def _ax_canonical(rng):
    a = random_step(rng, 6)
    raw = _raw_step_refinement(rng, a)
    return alg.add(raw, raw.zero_like()) == a.canonical() == raw.canonical()


def _ax_backend_agreement(rng):
    k = rng.randint(0, 4)
    s = random_tuple(rng, 1 << k)
    t = random_tuple(rng, 1 << k)

    def as_step(u):
        return StepFunction.from_uniform(k, u.entries)

    ok = True
    for op in (alg.add, alg.multiply, lambda x, y: x - y):
        ok = ok and as_step(op(s, t)) == op(as_step(s), as_step(t))
    ok = ok and s.norm() == as_step(s).norm() and s.is_positive() == as_step(s).is_positive()
    ok = ok and as_step(s.adjoint()) == as_step(s).adjoint()
    return ok


TUPLE_SIZE = 4


def _compatible(a, b):
    try:
        a.check_compatible(b)
    except TypeError:
        return False
    return True


class _Corpus:
    """Random operands sharing one backend; step functions unless ``tuple`` is drawn."""

    def __init__(self, rng, fixtures):
        self.rng = rng
        self.backend = "tuple" if rng.random() < 0.2 else "step"
        probe = random_tuple(rng, TUPLE_SIZE) if self.backend == "tuple" else StepFunction.constant(0)
        self.fixtures = [f for f in fixtures if _compatible(f.coefficients[0], probe)]

    def function(self):
        if self.fixtures and self.rng.random() < 0.25:
            return self.rng.choice(self.fixtures)
        return random_elementary(self.rng, 4, 3, backend=self.backend, tuple_size=TUPLE_SIZE)

    def element(self):
        if self.backend == "tuple":
            return random_tuple(self.rng, TUPLE_SIZE)
        return random_step(self.rng, 3)


def _ax_sesquilinear(rng, fixtures):
    c = _Corpus(rng, fixtures)
    f, g, h = c.function(), c.function(), c.function()
    a = c.element()
    additive = inner_product(f, g + h) == (inner_product(f, g) + inner_product(f, h)).canonical()
    right = inner_product(f, scale_right(g, a)) == alg.multiply(inner_product(f, g), a)
    return additive and right


def _ax_symmetry(rng, fixtures):
    c = _Corpus(rng, fixtures)
    f, g = c.function(), c.function()
    return inner_product(f, g) == inner_product(g, f)


def _ax_definite(rng, fixtures):
    c = _Corpus(rng, fixtures)
    f = c.function()
    gram = norm_sq_element(f)
    zero = f - f
    return gram.is_positive() and (gram.is_zero() == f.is_zero()) and norm_sq_element(zero).is_zero()


def _ax_partition_independence(rng, fixtures):
    c = _Corpus(rng, fixtures)
    f, g = c.function(), c.function()
    return inner_product(_random_refinement(rng, f), g) == inner_product(f, g)


def _ax_cauchy_schwarz(rng, fixtures):
    c = _Corpus(rng, fixtures)
    f, g = c.function(), c.function()
    fg = inner_product(f, g)
    gf = inner_product(g, f)
    return (norm_sq_element(g).scale(module_norm_sq(f)) - fg * gf).is_positive()


def _ax_oracle(rng, fixtures):
    f = random_elementary(rng, rng.randint(0, 8), 3)
    g = random_elementary(rng, rng.randint(0, 8), 3)
    y_level = max(c.partition.depth for c in f.coefficients + g.coefficients)
    return inner_product(f, g).on_uniform(y_level) == brute_inner_product(f, g, y_level=y_level)


ALGEBRA_AXIOMS = {
    "c_star_identity": _ax_c_star,
    "positivity_closure": _ax_positivity_closure,
    "norm_bounds": _ax_norm_bounds,
    "canonical_uniqueness": _ax_canonical,
    "backend_agreement": _ax_backend_agreement,
}

MODULE_AXIOMS = {
    "sesquilinearity": _ax_sesquilinear,
    "symmetry": _ax_symmetry,
    "definiteness": _ax_definite,
    "partition_independence": _ax_partition_independence,
    "module_cauchy_schwarz": _ax_cauchy_schwarz,
    "oracle_equivalence": _ax_oracle,
}


def axiom_rows(cases, seed, fixtures=()):
    fixtures = list(fixtures)
    rows = []
    for name, check in {**ALGEBRA_AXIOMS, **MODULE_AXIOMS}.items():
        # one stream per axiom so adding an axiom leaves the others' corpora unchanged
        rng = random.Random(f"{seed}:{name}")
        if name in MODULE_AXIOMS:
            passed = sum(bool(check(rng, fixtures)) for _ in range(cases))
        else:
            passed = sum(bool(check(rng)) for _ in range(cases))
        rows.append({"axiom": name, "cases": cases, "passed_cases": passed, "passed": passed == cases})
    return rows
