"""
Scalar literal grammar for map files.

    scalar := {"q": RAT, "s2": RAT, "s3": RAT, "s6": RAT}   (absent keys = 0)
            | RAT                                          (rational shorthand)
    RAT    := "p" | "p/q"   p signed decimal integer, q positive decimal integer
"""

import re
from fractions import Fraction
from typing import Any, Union

from ..errors import ParseError
from .surd import Surd

_RAT = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_KEYS = ("q", "s2", "s3", "s6")


def parse_rational(text: Any) -> Fraction:
    """Parse a RAT literal.

    Raises:
        ParseError: on anything outside the grammar, including q = 0
    """
    if not isinstance(text, str):
        raise ParseError(f"rational literal must be a string, got {text!r}")
    match = _RAT.match(text)
    if not match:
        raise ParseError(f"malformed rational literal {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Canonical RAT form: gcd 1, positive denominator, no '+' sign."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_scalar(literal: Any) -> Surd:
    if isinstance(literal, str):
        return Surd(parse_rational(literal))
    if isinstance(literal, dict):
        unknown = set(literal) - set(_KEYS)
        if unknown:
            raise ParseError(f"unknown scalar keys {sorted(unknown)}")
        return Surd(*(parse_rational(literal[k]) if k in literal else 0 for k in _KEYS))
    raise ParseError(f"scalar literal must be a string or an object, got {literal!r}")


def format_scalar(value: Surd) -> Union[str, dict]:
    """Canonical literal: bare RAT for rationals, else an object of nonzero keys."""
    if value.is_rational():
        return format_rational(value.q)
    return {k: format_rational(c) for k, c in zip(_KEYS, value.coef) if c}
