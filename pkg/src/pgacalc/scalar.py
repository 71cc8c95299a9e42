"""Exact rational scalars.

``fractions.Fraction`` already keeps numerator/denominator in lowest terms with a
positive denominator and represents zero as ``0/1``, so it is used directly as
the scalar type.  This module adds the textual ``p/q`` format shared by the CLI
and the golden files.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; anything inexact is rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (optional leading minus on ``p``).

    >>> parse_rational("-3/6")
    Fraction(-1, 2)
    """
    text = text.strip()
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"
