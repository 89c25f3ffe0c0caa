"""Exact rational arithmetic in canonical form, plus size measures.

Numbers are `fractions.Fraction` values, which already guarantee the
canonical invariants used everywhere in this package: numerator and
denominator coprime, denominator strictly positive, zero stored as 0/1.
Arithmetic and comparisons are the native operators.  This module adds
the constructors, the text form, and the unary/binary size accounting
that the complexity measurements rely on.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm

from .errors import EmptyInputError, InvalidDenominatorError, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?")


def normalize(num: int, den: int = 1) -> Fraction:
    """Canonical fraction num/den; the sign ends up on the numerator."""
    if den == 0:
        raise InvalidDenominatorError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def compare(a: Fraction, b: Fraction) -> int:
    """Total order: -1, 0 or 1, consistent with the sign of a - b."""
    return (a > b) - (a < b)


def parse_rational(text: str) -> Fraction:
    """Parse "a/b" or "a" (meaning a/1), optional leading minus."""
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ParseError(f"not a rational: {text!r}")
    if "/" in s:
        num, den = s.split("/")
        return normalize(int(num), int(den))
    return Fraction(int(s))


def format_rational(x: Fraction) -> str:
    """Canonical text form: "a" for integers, "a/b" otherwise."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def lcm_denominators(xs: list[Fraction]) -> int:
    """Least common multiple of the canonical denominators of xs.

    Multiplying every element of xs by the result yields integers; the
    list must be nonempty.
    """
    if not xs:
        raise EmptyInputError("lcm_denominators of an empty list")
    return lcm(*(x.denominator for x in xs))


def _unary_digits(k: int) -> int:
    # |k| written as that many strokes; 0 still occupies one digit.
    return abs(k) if k != 0 else 1


def _binary_digits(k: int) -> int:
    return abs(k).bit_length() if k != 0 else 1


def unary_size(x: Fraction) -> int:
    """Unary digit count of |numerator| plus that of the denominator."""
    return _unary_digits(x.numerator) + _unary_digits(x.denominator)


def binary_size(x: Fraction) -> int:
    """Bit count of |numerator| plus that of the denominator."""
    return _binary_digits(x.numerator) + _binary_digits(x.denominator)
