"""Exact rational helpers: dyadic square-root bounds and parsing.

Rationals are plain ``fractions.Fraction`` throughout the package; Fraction
already guarantees the canonical form (reduced, positive denominator).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

Q = Fraction

QZERO = Fraction(0)
QONE = Fraction(1)


def sqrt_lower(x: Fraction, bits: int = 16) -> Fraction:
    """Rational lower bound on sqrt(x), within a factor (1 - 2^-bits).

    For x > 0 the result is strictly positive and satisfies
    result**2 <= x.  Uses integer square roots only.
    """
    if x < 0:
        raise ValueError("sqrt of a negative rational")
    if x == 0:
        return QZERO
    n, d = x.numerator, x.denominator
    # isqrt(n*d*4^bits) / (d*2^bits) <= sqrt(n/d), relative error < 2^-bits
    scale = 1 << bits
    return Fraction(isqrt(n * d * scale * scale), d * scale)


def sqrt_upper(x: Fraction, bits: int = 16) -> Fraction:
    """Rational upper bound on sqrt(x): result**2 >= x."""
    if x < 0:
        raise ValueError("sqrt of a negative rational")
    if x == 0:
        return QZERO
    n, d = x.numerator, x.denominator
    scale = 1 << bits
    return Fraction(isqrt(n * d * scale * scale) + 1, d * scale)


def dyadic_above(x: Fraction, bits: int = 16) -> Fraction:
    """Smallest multiple of 2^-bits that is >= x."""
    scale = 1 << bits
    n, d = x.numerator, x.denominator
    return Fraction(-((-n * scale) // d), scale)


def parse_rational(text: str) -> Fraction:
    """Parse the rational literal grammar: optional sign, integer,
    optional "/" positive integer.  Examples: "-3/7", "5"."""
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            d = int(den.strip())
            if d <= 0:
                raise ValueError
            return Fraction(int(num.strip()), d)
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"invalid rational literal: {text!r}") from None


def format_rational(x: Fraction) -> str:
    """Inverse of parse_rational: "p/q" or bare integer."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
