"""Parsing and canonical printing of exact rationals.

Rationals are plain ``fractions.Fraction`` everywhere; this module only
fixes the wire format: "num/den" with den >= 1, or just "num" when the
denominator is 1.
"""

from fractions import Fraction

from .errors import SchemaError


def parse_rational(text) -> Fraction:
    """Parse "3", "-7/2", or an int into a Fraction."""
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise SchemaError(f"expected rational string, got {type(text).__name__}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"invalid rational {text!r}") from exc


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
