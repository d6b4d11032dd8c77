"""Exact rational scalars and their wire format.

Rationals are plain fractions.Fraction values throughout the package.  The
text form is strict: "a/b" with b > 0, or just "a" for integers, no
whitespace, always fully reduced on output.  This is the format used in
sequence files, reports, and CLI flags, and it round-trips bit-exactly.
"""
from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or "a".  Rejects floats, whitespace and empty strings."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction | int) -> str:
    """Canonical text for a rational: reduced "a/b", or "a" when integral."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def scalar_inv(x):
    """Multiplicative inverse of an exact scalar.

    Rationals invert through Fraction; any other scalar type is expected to
    provide inverse().  Inverting zero raises ZeroDivisionError either way.
    """
    if isinstance(x, (int, Fraction)):
        return Fraction(1) / Fraction(x)
    return x.inverse()
