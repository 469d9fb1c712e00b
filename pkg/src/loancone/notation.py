"""Text notation for cash flows: ``-100+10t+110t^2``.

Grammar (whitespace between tokens is ignored)::

    expression  := sign? term (sign term)*
    term        := coefficient | coefficient? symbol exponent?
    symbol      := "t" | "y"
    exponent    := "^" positive-integer
    coefficient := decimal ("/" integer)?

Decimals are read exactly, so ``1.1`` is ``11/10``.  Repeated powers add up.
"""

from __future__ import annotations

from fractions import Fraction

from .cashflow import CashFlow
from .errors import ParseDiagnostic

__all__ = ["parse", "format_cashflow", "format", "ParseDiagnostic"]

_SYMBOLS = "ty"
_DIGITS = "0123456789"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.coeffs: dict[int, Fraction] = {}

    def fail(self, message: str, pos: int | None = None):
        raise ParseDiagnostic(self.pos if pos is None else pos, message)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def digits(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
            self.pos += 1
        return self.text[start:self.pos]

    def number(self) -> Fraction:
        start = self.pos
        whole = self.digits()
        frac = ""
        if self.peek() == ".":
            self.pos += 1
            frac = self.digits()
            if not frac:
                self.fail("expected digits after decimal point")
        if not whole and not frac:
            self.fail("expected a number")
        value = Fraction(self.text[start:self.pos])
        self.skip_ws()
        if self.peek() == "/":
            self.pos += 1
            self.skip_ws()
            den_pos = self.pos
            den = self.digits()
            if not den:
                self.fail("expected an integer denominator")
            if int(den) == 0:
                self.fail("zero denominator", den_pos)
            value /= int(den)
        return value

    def term(self, sign: int):
        self.skip_ws()
        ch = self.peek()
        if not ch:
            self.fail("expected a term")
        coeff = Fraction(1)
        have_coeff = False
        if ch in _DIGITS or ch == ".":
            coeff = self.number()
            have_coeff = True
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                self.skip_ws()
                if not self.peek() or self.peek() not in _SYMBOLS:
                    self.fail("expected 't' after '*'")
            ch = self.peek()
        power = 0
        if ch and ch in _SYMBOLS:
            self.pos += 1
            power = 1
            self.skip_ws()
            if self.peek() == "^":
                self.pos += 1
                self.skip_ws()
                exp_pos = self.pos
                exp = self.digits()
                if not exp:
                    self.fail("expected a positive integer exponent")
                power = int(exp)
                if power == 0:
                    self.fail("exponent must be positive", exp_pos)
        elif ch.isalpha():
            self.fail(f"unknown symbol {ch!r}")
        elif not have_coeff:
            self.fail(f"unexpected character {ch!r}" if ch else "expected a term")
        value = self.coeffs.get(power, Fraction(0)) + sign * coeff
        self.coeffs[power] = value

    def parse(self) -> CashFlow:
        self.skip_ws()
        if not self.peek():
            self.fail("empty input")
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        self.term(sign)
        while True:
            self.skip_ws()
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                if ch.isalpha() and ch not in _SYMBOLS:
                    self.fail(f"unknown symbol {ch!r}")
                self.fail(f"expected '+' or '-', found {ch!r}")
            self.pos += 1
            self.term(-1 if ch == "-" else 1)
        return CashFlow(self.coeffs)


def parse(text: str) -> CashFlow:
    """Parse cash-flow notation into a canonical :class:`CashFlow`.

    >>> parse("-100+10t+110t^2").coefficients
    {0: Fraction(-100, 1), 1: Fraction(10, 1), 2: Fraction(110, 1)}

    Raises :class:`ParseDiagnostic` with the offending character offset.
    """
    if not isinstance(text, str):
        raise TypeError("cash-flow notation must be a string")
    return _Parser(text).parse()


def _term(k: int, c: Fraction) -> str:
    if k == 0:
        return str(c)
    sym = "t" if k == 1 else f"t^{k}"
    if c == 1:
        return sym
    if c == -1:
        return "-" + sym
    return f"{c}{sym}"


def format_cashflow(cf: CashFlow) -> str:
    """Render in ascending time order with symbol ``t``; the zero flow is ``"0"``."""
    out = ""
    for k, c in cf.items():
        s = _term(k, c)
        if out and not s.startswith("-"):
            out += "+"
        out += s
    return out or "0"


format = format_cashflow  # noqa: A001
