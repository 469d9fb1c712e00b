"""Exception types raised by the library.

Every domain error carries a stable ``name`` so the CLI can report it
without leaking a traceback.
"""

from __future__ import annotations


class LoanConeError(Exception):
    name = "LoanConeError"


class NotATransaction(LoanConeError):
    name = "NotATransaction"


class NotALoan(LoanConeError):
    name = "NotALoan"


class NotInCone(LoanConeError):
    name = "NotInCone"

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class NoPositiveRate(LoanConeError):
    name = "NoPositiveRate"


class InvalidPartition(LoanConeError):
    name = "InvalidPartition"


class InvalidRate(LoanConeError):
    name = "InvalidRate"


class InvalidHorizon(LoanConeError):
    name = "InvalidHorizon"


class MaturityTooSmall(LoanConeError):
    name = "MaturityTooSmall"


class ToleranceInvalid(LoanConeError):
    name = "ToleranceInvalid"


class ParseDiagnostic(LoanConeError):
    """Malformed cash-flow text; ``position`` is a character offset into the input."""

    name = "ParseDiagnostic"

    def __init__(self, position: int, message: str):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
        self.message = message
