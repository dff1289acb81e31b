"""Exact rational scalars.

The package does all exact arithmetic over ``fractions.Fraction``, which keeps
values normalized (gcd 1, positive denominator).  This module adds the string
format used by instance files ("p/q", with "/q" omitted for integers) and a
few aggregate helpers.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value: int | str | Fraction) -> Fraction:
    """Coerce ints, "p/q" strings, or Fractions to an exact Fraction.

    Floats are rejected on purpose: silently converting a float would launder
    rounding error into the exact pipeline.
    """
    if isinstance(value, float):
        raise TypeError("refusing float -> Rational; pass an int, 'p/q' string, or Fraction")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    return str(value)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def common_denominator(values: Iterable[Fraction]) -> int:
    """LCM of denominators; 1 for an empty iterable."""
    out = 1
    for v in values:
        out = lcm(out, v.denominator)
    return out


def max_denominator(values: Iterable[Fraction]) -> int:
    """Largest denominator appearing among ``values`` (1 if empty)."""
    out = 1
    for v in values:
        if v.denominator > out:
            out = v.denominator
    return out
