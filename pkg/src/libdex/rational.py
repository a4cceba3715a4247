"""Exact rational values and their canonical JSON encoding.

All engine math runs on ``fractions.Fraction`` so tied mean ranks (x.5) and
third-valued rating means stay exact; rounding happens only at display time.

Canonical JSON form of a rational, chosen so that encoding is injective and
round-trips exactly through ``json``:

* integral values encode as JSON ints,
* values with a short finite decimal expansion (at most six fractional
  digits) encode as JSON numbers (``1.5``, ``0.75``),
* everything else encodes as a lowest-terms ``"p/q"`` string (``"1/3"``).
"""

from __future__ import annotations

import decimal
from decimal import Decimal
from fractions import Fraction

from .errors import DocumentError

_SHORT_DECIMAL_DENOMINATOR = 10**6


def to_rational(value: int | float | str | Fraction, *, context: str = "value") -> Fraction:
    """Parse a JSON-ish scalar into an exact Fraction.

    Floats are read with decimal semantics (0.1 means 1/10, not the nearest
    binary float), so values written as short decimals survive a round trip.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DocumentError(f"{context}: booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{context}: not a rational number: {value!r}") from exc
    raise DocumentError(f"{context}: expected a number, got {type(value).__name__}")


def encode_rational(value: Fraction) -> int | float | str:
    """Canonical JSON form (see module docstring). Injective on values."""
    if value.denominator == 1:
        return int(value)
    if _SHORT_DECIMAL_DENOMINATOR % value.denominator == 0:
        candidate = float(value)
        # repr is what json emits; accept the float form only if it decodes
        # back to the same rational (fails for huge numerators).
        if Fraction(repr(candidate)) == value:
            return candidate
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, places: int = 2) -> str:
    """Display rounding: half-up to the given number of decimal places."""
    with decimal.localcontext() as ctx:
        ctx.prec = 50
        quantum = Decimal(1).scaleb(-places)
        d = Decimal(value.numerator) / Decimal(value.denominator)
        return str(d.quantize(quantum, rounding=decimal.ROUND_HALF_UP))


def format_signed(value: Fraction, places: int = 2) -> str:
    """Compact signed display: '+1', '0', '+0.5', '-0.67'."""
    text = format_decimal(value, places)
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        text = "0"
    if value > 0 and not text.startswith("+"):
        text = "+" + text
    return text
