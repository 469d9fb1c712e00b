"""Exact no-arbitrage modelling of loans at simple interest."""

from .cashflow import (
    CashFlow,
    Classification,
    add,
    classify,
    extremal_projection,
    negate,
    net_gain,
    scale,
)
from .cone import (
    ArbitrageReport,
    Decomposition,
    ElementaryComponent,
    MutuumArbitrageSplit,
    decompose,
    from_partition,
    generator,
    is_arbitrage_free,
    membership,
    saturation_check,
    solve_rate,
    split_mutuum_arbitrage,
)
from .errors import (
    InvalidHorizon,
    InvalidPartition,
    InvalidRate,
    LoanConeError,
    MaturityTooSmall,
    NoPositiveRate,
    NotALoan,
    NotATransaction,
    NotInCone,
    ParseDiagnostic,
    ToleranceInvalid,
)
from .notation import format_cashflow, parse
from .payoff import (
    AnnuitySpec,
    CriticalRate,
    PayoffSchedule,
    Shape,
    ShapeReport,
    annuity,
    compound_payoff_profile,
    critical_rate,
    payoff_polynomial,
    payoff_profile,
)
from .rootfind import Enclosure

__version__ = "0.1.0"
