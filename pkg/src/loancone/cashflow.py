"""Cash flows as sparse polynomials with exact rational coefficients.

A cash flow maps a nonnegative integer time index to the amount due at that
time.  Positive amounts are received, negative amounts are paid.  ``-100 +
10t + 110t^2`` lends 100 now and receives 10 after one year and 110 after two.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional

from .errors import NotATransaction

__all__ = [
    "CashFlow",
    "Classification",
    "as_fraction",
    "classify",
    "net_gain",
    "add",
    "scale",
    "negate",
    "extremal_projection",
    "monomial",
    "total",
    "ZERO",
]


def as_fraction(value) -> Fraction:
    """Coerce ``value`` to an exact :class:`Fraction`.

    Integers, rationals, decimals and strings such as ``"1/10"`` or ``"0.1"``
    are accepted.  Binary floats are rejected.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not amounts")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, (str, Decimal)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class CashFlow:
    """Immutable sparse map ``time -> amount`` in canonical form (no zero entries)."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coefficients: Optional[Mapping[int, object]] = None):
        coeffs: dict[int, Fraction] = {}
        for k, v in (coefficients or {}).items():
            if isinstance(k, bool) or not isinstance(k, numbers.Integral):
                raise TypeError(f"time index must be an integer, got {k!r}")
            k = int(k)
            if k < 0:
                raise ValueError(f"time index must be nonnegative, got {k}")
            c = as_fraction(v)
            if c:
                coeffs[k] = c
        self._coeffs = dict(sorted(coeffs.items()))
        self._hash = None

    @classmethod
    def _from_canonical(cls, coeffs: dict[int, Fraction]) -> "CashFlow":
        cf = object.__new__(cls)
        cf._coeffs = dict(sorted(coeffs.items()))
        cf._hash = None
        return cf

    # mapping-like access

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs.get(k, Fraction(0))

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def items(self):
        return self._coeffs.items()

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._coeffs)

    @property
    def maturity(self) -> Optional[int]:
        return max(self._coeffs) if self._coeffs else None

    def installments(self) -> Iterator[tuple[int, Fraction]]:
        """Yield ``(k, amount)`` for every nonzero entry with ``k >= 1``."""
        return ((k, c) for k, c in self._coeffs.items() if k >= 1)

    def truncate(self, k: int) -> "CashFlow":
        """Keep only the entries due at times ``0..k``."""
        return CashFlow._from_canonical({i: c for i, c in self._coeffs.items() if i <= k})

    # arithmetic

    def __add__(self, other: "CashFlow") -> "CashFlow":
        if not isinstance(other, CashFlow):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return CashFlow._from_canonical(out)

    def __neg__(self) -> "CashFlow":
        return CashFlow._from_canonical({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "CashFlow") -> "CashFlow":
        if not isinstance(other, CashFlow):
            return NotImplemented
        return self + (-other)

    def __mul__(self, r) -> "CashFlow":
        if isinstance(r, CashFlow):
            return NotImplemented
        r = as_fraction(r)
        if not r:
            return ZERO
        return CashFlow._from_canonical({k: c * r for k, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CashFlow):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        from .notation import format_cashflow

        return f"CashFlow({format_cashflow(self)!r})"

    # serialization

    def to_json(self) -> dict:
        return {"coefficients": {str(k): str(c) for k, c in self._coeffs.items()}}

    @classmethod
    def from_json(cls, data) -> "CashFlow":
        """Inverse of :meth:`to_json`.  A bare notation string is also accepted."""
        if isinstance(data, str):
            from .notation import parse

            return parse(data)
        coeffs = data["coefficients"]
        out = {}
        for k, v in coeffs.items():
            if isinstance(v, float):
                raise TypeError("floating-point amounts are not accepted")
            out[int(k)] = as_fraction(str(v))
        return cls(out)


ZERO = CashFlow()


def monomial(amount, k: int) -> CashFlow:
    """The cash flow ``amount * t^k``."""
    return CashFlow({k: amount})


@dataclass(frozen=True)
class Classification:
    is_transaction: bool
    is_loan: bool
    is_rewarding_loan: bool
    is_mutuum: bool
    is_arbitrage: bool
    is_elementary: bool
    maturity: Optional[int]
    principal: Optional[Fraction]

    def to_json(self) -> dict:
        d = {
            "is_transaction": self.is_transaction,
            "is_loan": self.is_loan,
            "is_rewarding_loan": self.is_rewarding_loan,
            "is_mutuum": self.is_mutuum,
            "is_arbitrage": self.is_arbitrage,
            "is_elementary": self.is_elementary,
            "maturity": self.maturity,
            "principal": None if self.principal is None else str(self.principal),
        }
        return d


def net_gain(cf: CashFlow) -> Fraction:
    """Sum of all coefficients, time 0 included."""
    return sum((c for _, c in cf.items()), Fraction(0))


def _installment_total(cf: CashFlow) -> Fraction:
    return sum((c for _, c in cf.installments()), Fraction(0))


def is_transaction(cf: CashFlow) -> bool:
    return cf[0] <= 0 and all(c > 0 for _, c in cf.installments())


def is_loan(cf: CashFlow) -> bool:
    return is_transaction(cf) and cf[0] < 0 and _installment_total(cf) >= -cf[0]


def classify(cf: CashFlow) -> Classification:
    transaction = is_transaction(cf)
    principal = -cf[0] if cf[0] < 0 else None
    total = _installment_total(cf)
    loan = transaction and principal is not None and total >= principal
    rewarding = loan and total > principal
    mutuum = loan and total == principal
    arbitrage = transaction and cf[0] == 0 and total > 0
    elementary = loan and len(cf) == 2
    return Classification(
        is_transaction=transaction,
        is_loan=loan,
        is_rewarding_loan=rewarding,
        is_mutuum=mutuum,
        is_arbitrage=arbitrage,
        is_elementary=elementary,
        maturity=cf.maturity,
        principal=principal,
    )


def add(a: CashFlow, b: CashFlow) -> CashFlow:
    return a + b


def scale(a: CashFlow, r) -> CashFlow:
    return a * r


def negate(a: CashFlow) -> CashFlow:
    return -a


def extremal_projection(cf: CashFlow) -> list[tuple[int, CashFlow]]:
    """Split a transaction into its monomial components ``cf(i) t^i``, by time."""
    if not is_transaction(cf):
        raise NotATransaction(f"{cf!r} is not a transaction")
    return [(k, monomial(c, k)) for k, c in cf.items()]


def total(flows: Iterable[CashFlow]) -> CashFlow:
    out = ZERO
    for f in flows:
        out = out + f
    return out
