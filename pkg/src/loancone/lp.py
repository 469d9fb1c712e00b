"""Exact primal simplex over the rationals.

Solves ``maximize c.x  s.t.  A x <= b, x >= 0`` with ``b >= 0`` so the slack
basis is feasible from the start.  The tableau is kept in integers with a
common denominator (fraction-free pivoting); each pivot divides exactly by the
previous pivot element, so no gcd reductions are needed.  Bland's rule rules
out cycling on the degenerate pivots that homogeneous systems produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

__all__ = ["LPResult", "maximize"]


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" or "unbounded"
    value: Optional[Fraction]
    x: Optional[tuple[Fraction, ...]]
    pivots: int


def _ratio(v) -> tuple[int, int]:
    if type(v) is int:
        return v, 1
    if not isinstance(v, Fraction):
        v = Fraction(v)
    return v.numerator, v.denominator


def _integer_row(row: Sequence) -> tuple[list[int], int]:
    """Scale ``row`` to integers; returns the integer row and the scale factor."""
    pairs = [_ratio(v) for v in row]
    den = lcm(*(d for _, d in pairs)) if pairs else 1
    return [n * (den // d) for n, d in pairs], den


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence, max_pivots: int = 100_000) -> LPResult:
    m = len(A)
    n = len(c)
    if len(b) != m or any(len(row) != n for row in A):
        raise ValueError("inconsistent LP dimensions")
    if any(v < 0 for v in b):
        raise ValueError("right-hand side must be nonnegative")

    rhs = n + m
    tab: list[list[int]] = []
    for i in range(m):
        # each row is scaled to integers; the slack absorbs the scale factor
        scaled, _ = _integer_row(list(A[i]) + [b[i]])
        row = scaled[:n] + [0] * m + [scaled[n]]
        row[n + i] = 1
        tab.append(row)
    c_int, c_den = _integer_row(c)
    obj = [-v for v in c_int] + [0] * (m + 1)
    tab.append(obj)

    basis = [n + i for i in range(m)]
    d = 1
    pivots = 0
    while True:
        col = next((j for j in range(rhs) if obj[j] < 0), None)
        if col is None:
            break
        best = None
        for i in range(m):
            a = tab[i][col]
            if a > 0:
                if best is None:
                    best = i
                    continue
                # ratio tab[i][rhs]/a vs tab[best][rhs]/tab[best][col]
                lhs = tab[i][rhs] * tab[best][col]
                rhs_ = tab[best][rhs] * a
                if lhs < rhs_ or (lhs == rhs_ and basis[i] < basis[best]):
                    best = i
        if best is None:
            return LPResult("unbounded", None, None, pivots)
        if pivots >= max_pivots:
            raise RuntimeError("pivot limit exceeded")
        p = tab[best][col]
        prow = tab[best]
        for i in range(m + 1):
            if i == best:
                continue
            row = tab[i]
            f = row[col]
            if f:
                tab[i] = [(v * p - f * w) // d for v, w in zip(row, prow)]
            else:
                tab[i] = [(v * p) // d for v in row]
        obj = tab[m]
        basis[best] = col
        d = p
        pivots += 1

    x = [Fraction(0)] * (n + m)
    for i, var in enumerate(basis):
        x[var] = Fraction(tab[i][rhs], d)
    value = Fraction(obj[rhs], d * c_den)
    return LPResult("optimal", value, tuple(x[:n]), pivots)
