"""Human-readable renderings of exact values."""

from __future__ import annotations

from fractions import Fraction


def decimal_string(value, places: int = 12) -> str:
    """Round ``value`` half-to-even at ``places`` decimals and render it exactly.

    >>> decimal_string(Fraction(2, 3))
    '0.666666666667'
    """
    q = round(Fraction(value) * 10**places)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"
