"""JSON encoding of the exact objects.

Rationals are strings ``"p/q"`` in lowest terms (integers accepted on input,
always written as ``"n/1"``). Cells are ``{"level": k, "index": i}``,
partitions ``{"cells": [...]}``, step elements
``{"partition": ..., "values": [...]}``, tuple elements ``{"entries": [...]}``,
elementary functions ``{"domain_partition": ..., "coefficients": [...]}`` and
positive functionals ``{"density": ..., "mass": "p/q"}``.
"""

import json

from .algebra import StepFunction, TupleElement
from .errors import FormatError, HilmodError
from .functional import PositiveFunctional
from .hilbert_module import ElementaryFunction
from .partition import DyadicInterval, DyadicPartition
from .rational import format_rational, parse_rational


def dump_rational(q):
    return format_rational(q)


def load_rational(obj):
    if isinstance(obj, bool) or not isinstance(obj, (str, int)):
        raise FormatError(f"expected a 'p/q' string, got {obj!r}")
    return parse_rational(str(obj))


def _require(obj, keys, what):
    if not isinstance(obj, dict):
        raise FormatError(f"{what} must be a JSON object, got {type(obj).__name__}")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise FormatError(f"{what} is missing {', '.join(missing)}")


def _list(obj, what):
    if not isinstance(obj, list):
        raise FormatError(f"{what} must be a JSON array")
    return obj


def dump_interval(c):
    return {"level": c.level, "index": c.index}


def load_interval(obj):
    _require(obj, ("level", "index"), "interval")
    lv, ix = obj["level"], obj["index"]
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (lv, ix)):
        raise FormatError("interval level and index must be integers")
    try:
        return DyadicInterval(lv, ix)
    except HilmodError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def dump_partition(p):
    return {"cells": [dump_interval(c) for c in p]}


def load_partition(obj):
    _require(obj, ("cells",), "partition")
    cells = [load_interval(c) for c in _list(obj["cells"], "cells")]
    try:
        return DyadicPartition(tuple(cells))
    except ValueError as exc:
        raise FormatError(f"invalid partition: {exc}") from exc


def dump_element(a):
    if isinstance(a, StepFunction):
        return {"partition": dump_partition(a.partition), "values": [dump_rational(v) for v in a.values]}
    if isinstance(a, TupleElement):
        return {"entries": [dump_rational(v) for v in a.entries]}
    raise TypeError(f"cannot serialize {type(a).__name__}")


def load_element(obj):
    if isinstance(obj, dict) and "entries" in obj:
        entries = [load_rational(v) for v in _list(obj["entries"], "entries")]
        if not entries:
            raise FormatError("tuple element needs at least one entry")
        return TupleElement(tuple(entries))
    _require(obj, ("partition", "values"), "algebra element")
    part = load_partition(obj["partition"])
    values = [load_rational(v) for v in _list(obj["values"], "values")]
    if len(values) != len(part):
        raise FormatError(f"{len(values)} values for {len(part)} cells")
    return StepFunction(part, values)


def dump_elementary(f):
    return {
        "domain_partition": dump_partition(f.domain_partition),
        "coefficients": [dump_element(a) for a in f.coefficients],
    }


def load_elementary(obj):
    _require(obj, ("domain_partition", "coefficients"), "elementary function")
    part = load_partition(obj["domain_partition"])
    coeffs = [load_element(a) for a in _list(obj["coefficients"], "coefficients")]
    if len(coeffs) != len(part):
        raise FormatError(f"{len(coeffs)} coefficients for {len(part)} cells")
    try:
        return ElementaryFunction(part, coeffs)
    except TypeError as exc:
        raise FormatError(str(exc)) from exc


def dump_functional(phi):
    return {"density": dump_element(phi.density), "mass": dump_rational(phi.mass)}


def load_functional(obj):
    _require(obj, ("density",), "positive functional")
    density = load_element(obj["density"])
    mass = load_rational(obj["mass"]) if "mass" in obj else None
    try:
        return PositiveFunctional(density, mass)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def dump_coefficients(coeffs):
    return [dump_element(c) for c in coeffs]


def load_coefficients(obj):
    return [load_element(c) for c in _list(obj, "coefficients")]


def loads(text, loader):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return loader(obj)


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
