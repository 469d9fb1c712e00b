"""Payoff amounts for loans at simple interest.

The payoff amount at time ``k`` is what the borrower pays, on top of the
``k``-th installment, to close the loan early without creating an arbitrage
against ``S_x``:

    dr(k) = -(1 + k x) * [a(0) + sum_{i=1..k} a(i) / (1 + i x)]

For a unit loan with ``n`` equal installments the first payoff amount exceeds
the principal exactly when ``x`` is above the critical rate ``a_n``, the root
of ``1 = x * sum_{k=1..n} 1/(1 + k x)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cashflow import CashFlow, as_fraction
from .cone import as_rate, membership
from .errors import InvalidHorizon, MaturityTooSmall, NotInCone, ToleranceInvalid
from .render import decimal_string
from .rootfind import Enclosure, bisect, expand_upper

__all__ = [
    "AnnuitySpec",
    "CriticalRate",
    "PayoffSchedule",
    "Shape",
    "ShapeReport",
    "annuity",
    "classify_shape",
    "compound_payoff_profile",
    "critical_rate",
    "installment",
    "payoff_amount",
    "payoff_polynomial",
    "payoff_profile",
    "weight",
]


def payoff_amount(cf: CashFlow, x, k: int) -> Fraction:
    """``dr(k)`` evaluated directly; no membership check."""
    x = as_fraction(x)
    acc = cf[0]
    for i, c in cf.installments():
        if i > k:
            break
        acc += c / (1 + i * x)
    return -(1 + k * x) * acc


@dataclass(frozen=True)
class PayoffSchedule:
    loan: CashFlow
    rate: Fraction
    values: tuple[tuple[int, Fraction], ...]
    maturity: int

    def as_cashflow(self) -> CashFlow:
        return CashFlow(dict(self.values))

    def amount(self, k: int) -> Fraction:
        return dict(self.values)[k]

    def truncated(self, k: int) -> CashFlow:
        """First ``k`` installments plus the payoff amount at ``k``."""
        return self.loan.truncate(k) + CashFlow({k: self.amount(k)})

    def terminal(self) -> Fraction:
        """The payoff formula extended to ``k = n``; zero for every member of ``S_x``."""
        return payoff_amount(self.loan, self.rate, self.maturity)

    def rows(self) -> list[tuple[int, Fraction]]:
        return list(self.values)

    def to_json(self) -> dict:
        return {
            "rate": str(self.rate),
            "maturity": self.maturity,
            "values": [
                {"k": k, "amount": str(v), "decimal": decimal_string(v)} for k, v in self.values
            ],
        }


def payoff_polynomial(cf: CashFlow, x) -> PayoffSchedule:
    x = as_rate(x)
    m = membership(cf, x)
    if not m:
        raise NotInCone(f"{cf!r} is not in S_{x} (residual {m.residual})", m.residual)
    n = cf.maturity
    if n < 2:
        raise MaturityTooSmall(f"maturity {n} leaves no early payoff time")
    values = tuple((k, payoff_amount(cf, x, k)) for k in range(1, n))
    return PayoffSchedule(cf, x, values, n)


def _check_horizon(n: int, minimum: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < minimum:
        raise InvalidHorizon(f"number of installments must be an integer >= {minimum}, got {n}")
    return int(n)


def weight(x, n: int) -> Fraction:
    """``w(x, n) = sum_{k=1..n} 1/(1 + x k)``."""
    x = as_fraction(x)
    return sum((1 / (1 + x * k) for k in range(1, n + 1)), Fraction(0))


def installment(x, n: int) -> Fraction:
    """Constant installment ``r(x, n) = 1 / w(x, n)`` repaying a unit principal."""
    return 1 / weight(x, n)


@dataclass(frozen=True)
class AnnuitySpec:
    rate: Fraction
    n: int
    installment: Fraction
    weight: Fraction

    def to_json(self) -> dict:
        return {
            "rate": str(self.rate),
            "n": self.n,
            "installment": str(self.installment),
            "installment_decimal": decimal_string(self.installment),
            "weight": str(self.weight),
        }


def annuity(x, n: int) -> tuple[AnnuitySpec, CashFlow]:
    """Unit-principal loan in ``S_x`` with ``n`` equal installments."""
    x = as_rate(x)
    n = _check_horizon(n, 1)
    w = weight(x, n)
    r = 1 / w
    cf = CashFlow({0: -1, **{k: r for k in range(1, n + 1)}})
    return AnnuitySpec(x, n, r, w), cf


@dataclass(frozen=True)
class CriticalRate:
    n: int
    enclosure: Enclosure

    @property
    def width(self) -> Fraction:
        return self.enclosure.width

    @property
    def midpoint(self) -> Fraction:
        return self.enclosure.midpoint

    def to_json(self) -> dict:
        return {"n": self.n, **self.enclosure.to_json()}


def critical_rate_residual(x, n: int) -> Fraction:
    """``1 - x w(x, n)``: positive below the critical rate, negative above."""
    x = as_fraction(x)
    return 1 - x * weight(x, n)


def critical_rate(n: int, tol) -> CriticalRate:
    n = _check_horizon(n, 2)
    try:
        tol = as_fraction(tol)
    except (TypeError, ValueError) as exc:
        raise ToleranceInvalid(str(exc)) from exc
    if tol <= 0:
        raise ToleranceInvalid(f"tolerance must be positive, got {tol}")

    def g(x: Fraction) -> Fraction:
        return critical_rate_residual(x, n)

    hi = expand_upper(g, Fraction(0), Fraction(1))
    return CriticalRate(n, bisect(g, Fraction(0), hi, tol))


class Shape(str, enum.Enum):
    DECREASING = "decreasing"
    UNIMODAL = "unimodal"
    SINGLE_POINT = "single_point"
    BOUNDARY = "boundary"
    IRREGULAR = "irregular"


def classify_shape(values: Sequence[Fraction]) -> tuple[Shape, Optional[int]]:
    """Classify a profile indexed from ``k = 1``; returns the shape and its peak ``k``.

    Exact ties between neighbours give ``BOUNDARY``.  A rise after a fall,
    which the payoff theory excludes, gives ``IRREGULAR`` rather than an error.
    """
    if len(values) == 0:
        raise ValueError("empty profile")
    if len(values) == 1:
        return Shape.SINGLE_POINT, 1
    diffs = [b - a for a, b in zip(values, values[1:])]
    if any(d == 0 for d in diffs):
        return Shape.BOUNDARY, None
    rising = 0
    while rising < len(diffs) and diffs[rising] > 0:
        rising += 1
    if any(d > 0 for d in diffs[rising:]):
        return Shape.IRREGULAR, None
    if rising == 0:
        return Shape.DECREASING, 1
    return Shape.UNIMODAL, rising + 1


@dataclass(frozen=True)
class ShapeReport:
    rate: Fraction
    n: int
    profile: tuple[Fraction, ...]
    shape: Shape
    peak: Optional[int]
    first_exceeds_one: bool
    model: str = "simple"

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "rate": str(self.rate),
            "n": self.n,
            "shape": self.shape.value,
            "peak": self.peak,
            "first_exceeds_one": self.first_exceeds_one,
            "profile": [
                {"k": k, "amount": str(v), "decimal": decimal_string(v)}
                for k, v in enumerate(self.profile, start=1)
            ],
        }


def payoff_profile(x, n: int) -> ShapeReport:
    """Payoff amounts ``k = 1..n-1`` of the unit constant-installment loan ``rho[x, n]``."""
    x = as_rate(x)
    n = _check_horizon(n, 2)
    r = installment(x, n)
    profile = []
    paid = Fraction(0)
    for k in range(1, n):
        paid += r / (1 + k * x)
        profile.append((1 + k * x) * (1 - paid))
    shape, peak = classify_shape(profile)
    return ShapeReport(x, n, tuple(profile), shape, peak, profile[0] > 1)


def compound_payoff_profile(x, n: int) -> ShapeReport:
    """Outstanding balances ``B_1..B_{n-1}`` of a unit loan amortized at compound rate ``x``.

    Reference model only, for contrast with :func:`payoff_profile`.
    """
    x = as_rate(x)
    n = _check_horizon(n, 2)
    growth = (1 + x) ** n
    payment = x * growth / (growth - 1)
    balance = Fraction(1)
    profile = []
    for _ in range(1, n):
        balance = balance * (1 + x) - payment
        profile.append(balance)
    shape, peak = classify_shape(profile)
    return ShapeReport(x, n, tuple(profile), shape, peak, profile[0] > 1, model="compound")
