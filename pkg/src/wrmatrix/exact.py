"""Exact scalar helpers.

Scalars are :class:`fractions.Fraction`, which already keeps a canonical
``numerator/denominator`` form with a positive denominator.  This module adds
the binomial coefficient, an integer power honouring ``0**0 == 1``, and the
text format used on the command line and in JSON/CSV output.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional leading ``-``)."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    return str(as_rational(q))


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints and rational literals to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def binomial(i: int, k: int) -> int:
    """C(i, k) for nonnegative integers; zero when ``k > i``."""
    return math.comb(i, k)


def rat_pow(base: RationalLike, exp: int) -> Fraction:
    """Exact integer power with ``0**0 == 1``.

    Raises ZeroDivisionError for a zero base with a negative exponent.
    """
    base = as_rational(base)
    if exp < 0 and base == 0:
        raise ZeroDivisionError("zero raised to a negative power")
    return base**exp


def powers(base: RationalLike, count: int) -> list[Fraction]:
    """``[base**0, base**1, ..., base**(count-1)]``."""
    base = as_rational(base)
    out = [ONE] * count
    for i in range(1, count):
        out[i] = out[i - 1] * base
    return out
