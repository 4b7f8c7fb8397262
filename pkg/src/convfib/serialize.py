"""Lossless text formats for the exact types.

Integers travel as decimal strings of arbitrary length, rationals as
"numerator/denominator" with a "/1" suffix elided, and a rational series
as a JSON array of coefficient strings ordered by power of t.  Values
emitted by the CLI always round-trip through these functions.
"""

from __future__ import annotations

import re
from fractions import Fraction

from convfib.series import Series

_INT_RE = re.compile(r"^-?\d+$")
_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def int_to_str(value: int) -> str:
    return str(value)


def int_from_str(text: str) -> int:
    if not _INT_RE.match(text):
        raise ValueError(f"not a decimal integer string: {text!r}")
    return int(text)


def rational_to_str(value: Fraction | int) -> str:
    # str(Fraction) already elides the "/1" of integral values.
    return str(Fraction(value))


def rational_from_str(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational string: {text!r}")
    return Fraction(text)


def series_to_strings(series: Series) -> list[str]:
    """Coefficient strings by power of t; rational-coefficient series only."""
    if series.is_poly_ring():
        raise TypeError("only rational-coefficient series have a string form")
    return [rational_to_str(c) for c in series.coefficients]


def series_from_strings(values: list[str]) -> Series:
    if not values:
        raise ValueError("a series needs at least the t^0 coefficient")
    return Series([rational_from_str(v) for v in values])
