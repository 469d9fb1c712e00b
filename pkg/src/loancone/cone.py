"""Loans at simple interest and arbitrage detection.

For a rate ``x > 0`` the cone ``S_x`` is generated by the elementary loans

    beta_n = -1 + (1 + n x) t^n,      n >= 1.

A loan belongs to ``S_x`` exactly when its principal equals the sum of its
installments discounted at simple interest, ``sum_k a(k) / (1 + x k)``.  The
decomposition into generators is then unique, with quota
``a(k) / (1 + x k)`` at each installment time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from .cashflow import CashFlow, as_fraction, classify, is_loan
from .errors import (
    InvalidPartition,
    InvalidRate,
    NoPositiveRate,
    NotALoan,
    NotInCone,
)
from .lp import maximize
from .rootfind import Enclosure, bisect, expand_upper

__all__ = [
    "ArbitrageReport",
    "Decomposition",
    "ElementaryComponent",
    "Membership",
    "MutuumArbitrageSplit",
    "Saturation",
    "as_rate",
    "decompose",
    "discounted_value",
    "from_partition",
    "generator",
    "is_arbitrage_free",
    "membership",
    "saturation_check",
    "solve_rate",
    "split_mutuum_arbitrage",
]


def as_rate(x) -> Fraction:
    try:
        x = as_fraction(x)
    except (TypeError, ValueError) as exc:
        raise InvalidRate(str(exc)) from exc
    if x <= 0:
        raise InvalidRate(f"rate must be positive, got {x}")
    return x


def _require_loan(cf: CashFlow) -> None:
    if not is_loan(cf):
        raise NotALoan(f"{cf!r} is not a loan")


def generator(n: int, x, amount=1) -> CashFlow:
    """``amount * (-1 + (1 + n x) t^n)``, the elementary loan of maturity ``n`` at rate ``x``."""
    x = as_fraction(x)
    c = as_fraction(amount)
    return CashFlow({0: -c, n: c * (1 + n * x)})


def discounted_value(cf: CashFlow, x) -> Fraction:
    """Installments discounted at simple interest: ``sum_{k>=1} cf(k) / (1 + x k)``."""
    x = as_fraction(x)
    return sum((c / (1 + x * k) for k, c in cf.installments()), Fraction(0))


@dataclass(frozen=True)
class Membership:
    member: bool
    residual: Fraction

    def __bool__(self) -> bool:
        return self.member

    def to_json(self) -> dict:
        return {"member": self.member, "residual": str(self.residual)}


def membership(cf: CashFlow, x) -> Membership:
    """Decide ``cf in S_x`` exactly.  ``residual = -cf(0) - discounted installments``."""
    x = as_rate(x)
    _require_loan(cf)
    residual = -cf[0] - discounted_value(cf, x)
    return Membership(residual == 0, residual)


def solve_rate(cf: CashFlow, tol) -> Enclosure:
    """Bracket the unique ``x > 0`` with ``cf in S_x`` to width ``tol``.

    The residual is strictly increasing in ``x``: negative at ``0`` for a
    rewarding loan and tending to the principal as ``x`` grows.
    """
    _require_loan(cf)
    if not classify(cf).is_rewarding_loan:
        raise NoPositiveRate(f"{cf!r} is a mutuum; its only root is x = 0")
    principal = -cf[0]

    def residual(x: Fraction) -> Fraction:
        return principal - discounted_value(cf, x)

    hi = expand_upper(residual, Fraction(0), Fraction(1))
    return bisect(residual, Fraction(0), hi, as_fraction(tol))


@dataclass(frozen=True)
class ElementaryComponent:
    time: int
    quota: Fraction

    def loan(self, x) -> CashFlow:
        return generator(self.time, x, self.quota)


@dataclass(frozen=True)
class Decomposition:
    rate: Fraction
    components: tuple[ElementaryComponent, ...]
    principal: Fraction

    @property
    def quotas(self) -> tuple[Fraction, ...]:
        return tuple(c.quota for c in self.components)

    @property
    def times(self) -> tuple[int, ...]:
        return tuple(c.time for c in self.components)

    def parts(self) -> list[CashFlow]:
        return [c.loan(self.rate) for c in self.components]

    def reconstruct(self) -> CashFlow:
        out = CashFlow()
        for part in self.parts():
            out = out + part
        return out

    def to_json(self) -> dict:
        return {
            "rate": str(self.rate),
            "principal": str(self.principal),
            "components": [{"time": c.time, "quota": str(c.quota)} for c in self.components],
        }


def _require_member(cf: CashFlow, x: Fraction) -> None:
    m = membership(cf, x)
    if not m:
        raise NotInCone(f"{cf!r} is not in S_{x} (residual {m.residual})", m.residual)


def decompose(cf: CashFlow, x) -> Decomposition:
    """Write a member of ``S_x`` as ``sum_k c_k beta_{j_k}`` (its extremal projections)."""
    x = as_rate(x)
    _require_member(cf, x)
    comps = tuple(ElementaryComponent(k, c / (1 + x * k)) for k, c in cf.installments())
    return Decomposition(rate=x, components=comps, principal=-cf[0])


@dataclass(frozen=True)
class MutuumArbitrageSplit:
    mutuum: CashFlow
    arbitrage: CashFlow

    def to_json(self) -> dict:
        from .notation import format_cashflow

        return {
            "mutuum": {**self.mutuum.to_json(), "text": format_cashflow(self.mutuum)},
            "arbitrage": {**self.arbitrage.to_json(), "text": format_cashflow(self.arbitrage)},
        }


def split_mutuum_arbitrage(cf: CashFlow, x) -> MutuumArbitrageSplit:
    """Split a member of ``S_x`` into mutuum (principal repayments) plus interest.

    Each generator ``c (-1 + (1 + j x) t^j)`` contributes ``c (-1 + t^j)`` to the
    mutuum and ``c j x t^j`` to the arbitrage.
    """
    dec = decompose(cf, x)
    mutuum = {0: -dec.principal}
    interest = {}
    for comp in dec.components:
        mutuum[comp.time] = comp.quota
        interest[comp.time] = comp.quota * comp.time * dec.rate
    return MutuumArbitrageSplit(CashFlow(mutuum), CashFlow(interest))


def from_partition(principal, quotas: Sequence, times: Sequence[int], x) -> CashFlow:
    """The unique member of ``S_x`` repaying quota ``quotas[k]`` at ``times[k]``."""
    x = as_rate(x)
    principal = as_fraction(principal)
    quotas = [as_fraction(q) for q in quotas]
    times = list(times)
    if not quotas or len(quotas) != len(times):
        raise InvalidPartition("quotas and times must be nonempty and of equal length")
    if principal <= 0 or any(q <= 0 for q in quotas):
        raise InvalidPartition("principal and quotas must be positive")
    if sum(quotas) != principal:
        raise InvalidPartition(f"quotas sum to {sum(quotas)}, not {principal}")
    if any(int(t) != t or t < 1 for t in times):
        raise InvalidPartition("times must be integers >= 1")
    if any(a >= b for a, b in zip(times, times[1:])):
        raise InvalidPartition("times must be strictly increasing")
    coeffs = {0: -principal}
    for q, j in zip(quotas, times):
        coeffs[int(j)] = q * (1 + x * j)
    return CashFlow(coeffs)


@dataclass(frozen=True)
class ArbitrageReport:
    free: bool
    coefficients: Optional[tuple[Fraction, ...]] = None
    flow: Optional[CashFlow] = None

    @property
    def verdict(self) -> str:
        return "free" if self.free else "witness"

    @property
    def witness_combination(self) -> Optional[list[tuple[int, Fraction]]]:
        if self.coefficients is None:
            return None
        return [(i, c) for i, c in enumerate(self.coefficients) if c]

    def to_json(self) -> dict:
        from .notation import format_cashflow

        out = {"verdict": self.verdict, "lambda": None, "flow": None}
        if not self.free:
            out["lambda"] = [str(c) for c in self.coefficients]
            out["flow"] = {**self.flow.to_json(), "text": format_cashflow(self.flow)}
        return out


def is_arbitrage_free(loans: Sequence[CashFlow]) -> ArbitrageReport:
    """Decide whether the linear hull of ``loans`` contains an arbitrage.

    Looks for ``v = sum_i l_i a_i`` with ``v(0) = 0``, ``v(k) >= 0`` and
    ``sum_k v(k) > 0`` by maximizing ``sum_{k>=1} v(k)`` over a box
    ``|l_i| <= 1`` (taken after scaling each loan to integer coefficients);
    the hull is a cone, so the box loses nothing.  Each ``l_i`` is split as
    ``p_i - q_i`` with ``p_i, q_i >= 0``.
    """
    loans = list(loans)
    for a in loans:
        _require_loan(a)
    m = len(loans)
    if m == 0:
        return ArbitrageReport(True)
    # Rescaling a loan by a positive factor leaves the hull unchanged; integer
    # rows keep the tableau free of Fraction overhead.
    scales = [lcm(*(c.denominator for _, c in a.items())) for a in loans]
    rows = [{k: int(c * s) for k, c in a.items()} for a, s in zip(loans, scales)]
    times = sorted({k for r in rows for k in r if k >= 1})

    def split(values: list[int]) -> list[int]:
        return values + [-v for v in values]

    at0 = [r.get(0, 0) for r in rows]
    A = [split(at0), split([-v for v in at0])]
    for k in times:
        A.append(split([-r.get(k, 0) for r in rows]))
    for i in range(m):
        # p_i + q_i <= 1 confines l_i = p_i - q_i to [-1, 1]
        box = [0] * (2 * m)
        box[i] = box[m + i] = 1
        A.append(box)
    b = [0] * (2 + len(times)) + [1] * m
    gains = [sum(v for k, v in r.items() if k >= 1) for r in rows]
    result = maximize(split(gains), A, b)
    if result.value <= 0:
        return ArbitrageReport(True)
    lam = [(result.x[i] - result.x[m + i]) * s for i, s in enumerate(scales)]
    # report the witness in the caller's units, normalized into the unit box
    top = max(abs(l) for l in lam)
    lam = tuple(l / top for l in lam)
    flow = CashFlow()
    for l, a in zip(lam, loans):
        flow = flow + a * l
    return ArbitrageReport(False, lam, flow)


@dataclass(frozen=True)
class Saturation:
    saturated: bool
    residual: Fraction
    projection: Optional[CashFlow] = None
    witness: Optional[CashFlow] = None

    def __bool__(self) -> bool:
        return self.saturated

    def to_json(self) -> dict:
        from .notation import format_cashflow

        out = {"saturated": self.saturated, "residual": str(self.residual),
               "projection": None, "witness": None}
        if self.witness is not None:
            out["projection"] = {**self.projection.to_json(),
                                 "text": format_cashflow(self.projection)}
            out["witness"] = {**self.witness.to_json(), "text": format_cashflow(self.witness)}
        return out


def saturation_check(cf: CashFlow, x) -> Saturation:
    """Test whether adding ``cf`` to ``S_x`` keeps the market arbitrage-free.

    When it does not, ``projection`` is ``cf`` with its installments rescaled
    into ``S_x`` at the same principal, and ``witness`` is the arbitrage
    ``+-(cf - projection)`` obtained by trading ``cf`` against it.
    """
    x = as_rate(x)
    m = membership(cf, x)
    if m:
        return Saturation(True, m.residual)
    principal = -cf[0]
    factor = principal / discounted_value(cf, x)
    projection = CashFlow({0: cf[0], **{k: c * factor for k, c in cf.installments()}})
    diff = cf - projection
    witness = diff if m.residual < 0 else -diff
    return Saturation(False, m.residual, projection, witness)
