"""Bisection with exact sign evaluation.

The function is evaluated at rational points and only its sign is used, so
the returned bracket is certified: the endpoints have opposite signs (or one
of them is an exact root).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import ToleranceInvalid

__all__ = ["Enclosure", "bisect", "expand_upper"]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    def to_json(self) -> dict:
        from .render import decimal_string

        return {
            "lo": str(self.lo),
            "hi": str(self.hi),
            "width": str(self.width),
            "midpoint": str(self.midpoint),
            "lo_decimal": decimal_string(self.lo),
            "hi_decimal": decimal_string(self.hi),
            "midpoint_decimal": decimal_string(self.midpoint),
        }


def expand_upper(f: Callable[[Fraction], object], lo: Fraction, start: Fraction) -> Fraction:
    """Double ``start`` until ``f`` changes sign relative to ``f(lo)``."""
    s_lo = _sign(f(lo))
    hi = start
    for _ in range(2000):
        if _sign(f(hi)) != s_lo:
            return hi
        hi *= 2
    raise ArithmeticError("no sign change found")


def bisect(f: Callable[[Fraction], object], lo, hi, tol) -> Enclosure:
    """Shrink ``[lo, hi]`` around a sign change of ``f`` until its width is ``<= tol``."""
    lo, hi, tol = Fraction(lo), Fraction(hi), Fraction(tol)
    if tol <= 0:
        raise ToleranceInvalid(f"tolerance must be positive, got {tol}")
    s_lo, s_hi = _sign(f(lo)), _sign(f(hi))
    if s_lo == 0:
        return Enclosure(lo, lo)
    if s_hi == 0:
        return Enclosure(hi, hi)
    if s_lo == s_hi:
        raise ValueError("f has the same sign at both endpoints")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = _sign(f(mid))
        if s == 0:
            return Enclosure(mid, mid)
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return Enclosure(lo, hi)
