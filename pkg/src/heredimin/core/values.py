"""Exact rational values."""

from fractions import Fraction
from typing import Union

# Every oracle returns a Fraction; equality and ordering are exact.
Value = Fraction

RationalLike = Union[int, str, Fraction]

ZERO = Fraction(0)


def to_value(raw: RationalLike) -> Value:
    """
    Convert an integer, a Fraction or a "p/q" string into a Value.

    Floats (and bools) are rejected: float ties would corrupt the
    equality tests the solver relies on.
    """
    if isinstance(raw, bool) or isinstance(raw, float):
        raise TypeError(f"Rational value expected, got {type(raw).__name__}: {raw!r}")
    if isinstance(raw, (int, Fraction)):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Invalid rational literal: {raw!r}")
    raise TypeError(f"Rational value expected, got {type(raw).__name__}: {raw!r}")


def format_value(value: Value) -> str:
    """Exact string form: "3/2", or "3" for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def encode_value(value: Value) -> Union[int, str]:
    """JSON form: plain integers stay integers, everything else a "p/q" string."""
    if value.denominator == 1:
        return value.numerator
    return format_value(value)
