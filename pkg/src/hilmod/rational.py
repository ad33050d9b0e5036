"""Exact rationals are :class:`fractions.Fraction`; this module handles text I/O."""

import re
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import FormatError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value):
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction(floats rejected)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def exact(value):
    """Like :func:`as_rational` but integer-valued results come back as ``int``.

    ``int`` is a :class:`numbers.Rational` and avoids Fraction overhead in the
    hot loops; it compares and hashes equal to the matching Fraction.
    """
    if type(value) is int:
        return value
    q = as_rational(value)
    return q.numerator if q.denominator == 1 else q


def parse_rational(text):
    if not isinstance(text, str):
        raise FormatError(f"rational must be a string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise FormatError(f"not a rational 'p/q': {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise FormatError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def to_decimal(q, digits=20):
    """``q`` rounded to ``digits`` significant digits."""
    q = Fraction(q)
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(q.numerator) / Decimal(q.denominator)


def to_fixed(q, places):
    """``q`` rounded half-even to ``places`` digits after the point, as text."""
    q = Fraction(q)
    scaled = round(q * 10**places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def sqrt_decimal(q, digits=20):
    """Decimal approximation of the non-negative square root of ``q``."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("square root of a negative rational")
    with localcontext() as ctx:
        ctx.prec = digits + 5
        root = (Decimal(q.numerator) / Decimal(q.denominator)).sqrt()
        ctx.prec = digits
        return +root
