"""Command-line front end.

Every verb prints one JSON envelope ``{"status", "payload", "diagnostics"}``
(or CSV with ``--format csv`` for tabular verbs).  Exit codes: 0 success,
1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import cashflow, cone, payoff
from .cashflow import CashFlow, as_fraction
from .errors import LoanConeError
from .notation import format_cashflow, parse
from .render import decimal_string

DEFAULT_TOL = "1e-12"
TABULAR = {"decompose", "payoff", "annuity", "profile", "compare-compound"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _flow_json(cf: CashFlow) -> dict:
    return {**cf.to_json(), "text": format_cashflow(cf)}


def _cash_flow_arg(text: str) -> CashFlow:
    return parse(text)


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text.strip())
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}")


def _rational_list(text: str) -> list[Fraction]:
    return [_rational(p) for p in text.split(",") if p.strip()]


# verbs -------------------------------------------------------------------


def _classify(args):
    cf = _cash_flow_arg(args.cash_flow)
    out = cashflow.classify(cf).to_json()
    out["net_gain"] = str(cashflow.net_gain(cf))
    out["cash_flow"] = _flow_json(cf)
    return out, None


def _parse(args):
    cf = _cash_flow_arg(args.cash_flow)
    return {"cash_flow": _flow_json(cf)}, None


def _rate(args):
    cf = _cash_flow_arg(args.cash_flow)
    enc = cone.solve_rate(cf, args.tol)
    return {"cash_flow": _flow_json(cf), "enclosure": enc.to_json()}, None


def _member(args):
    cf = _cash_flow_arg(args.cash_flow)
    sat = cone.saturation_check(cf, args.rate)
    out = {
        "member": sat.saturated,
        "residual": str(sat.residual),
        "rate": str(args.rate),
        "cash_flow": _flow_json(cf),
        "arbitrage_witness": None if sat.witness is None else _flow_json(sat.witness),
    }
    return out, None


def _decompose(args):
    cf = _cash_flow_arg(args.cash_flow)
    dec = cone.decompose(cf, args.rate)
    rows = [("time", "quota", "quota_decimal")]
    rows += [(c.time, str(c.quota), decimal_string(c.quota)) for c in dec.components]
    return dec.to_json(), rows


def _split(args):
    cf = _cash_flow_arg(args.cash_flow)
    return cone.split_mutuum_arbitrage(cf, args.rate).to_json(), None


def _partition(args):
    cf = cone.from_partition(args.principal, args.quotas, args.times, args.rate)
    return {"cash_flow": _flow_json(cf), "rate": str(args.rate)}, None


def _arbitrage(args):
    loans = [_cash_flow_arg(t) for t in args.cash_flows]
    return cone.is_arbitrage_free(loans).to_json(), None


def _payoff(args):
    cf = _cash_flow_arg(args.cash_flow)
    sched = payoff.payoff_polynomial(cf, args.rate)
    out = sched.to_json()
    out["polynomial"] = _flow_json(sched.as_cashflow())
    out["cash_flow"] = _flow_json(cf)
    rows = [("k", "amount", "amount_decimal")]
    rows += [(k, str(v), decimal_string(v)) for k, v in sched.values]
    return out, rows


def _annuity(args):
    spec, cf = payoff.annuity(args.rate, args.n)
    out = spec.to_json()
    out["cash_flow"] = _flow_json(cf)
    rows = [("k", "amount", "amount_decimal")]
    rows += [(k, str(v), decimal_string(v)) for k, v in cf.items()]
    return out, rows


def _profile_rows(*reports):
    header = ["k"]
    for rep in reports:
        header += [rep.model, f"{rep.model}_decimal"]
    rows = [tuple(header)]
    for i in range(len(reports[0].profile)):
        row = [i + 1]
        for rep in reports:
            v = rep.profile[i]
            row += [str(v), decimal_string(v)]
        rows.append(tuple(row))
    return rows


def _profile(args):
    simple = payoff.payoff_profile(args.rate, args.n)
    if args.compare:
        compound = payoff.compound_payoff_profile(args.rate, args.n)
        out = {"simple": simple.to_json(), "compound": compound.to_json()}
        return out, _profile_rows(simple, compound)
    return simple.to_json(), _profile_rows(simple)


def _compare_compound(args):
    compound = payoff.compound_payoff_profile(args.rate, args.n)
    return compound.to_json(), _profile_rows(compound)


def _critical_rate(args):
    return payoff.critical_rate(args.n, args.tol).to_json(), None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="loancone", description="Exact simple-interest loan analysis.")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    def verb(name, func, help, flow=True, rate=False, tol=False, horizon=False):
        p = sub.add_parser(name, help=help)
        if flow:
            p.add_argument("cash_flow", help="cash flow, e.g. -100+10t+110t^2")
        if horizon:
            p.add_argument("n", type=int, help="number of installments")
        if rate:
            p.add_argument("--rate", type=_rational, required=True, help="e.g. 1/10 or 0.1")
        if tol:
            p.add_argument("--tol", type=_rational, default=_rational(DEFAULT_TOL))
        p.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    verb("classify", _classify, "classify a cash flow")
    verb("parse", _parse, "parse and normalize a cash flow")
    verb("rate", _rate, "implied simple interest rate", tol=True)
    verb("member", _member, "membership in S_x", rate=True)
    verb("decompose", _decompose, "elementary decomposition", rate=True)
    verb("split", _split, "mutuum plus arbitrage split", rate=True)
    p = verb("partition", _partition, "loan from a principal partition", flow=False, rate=True)
    p.add_argument("--principal", type=_rational, required=True)
    p.add_argument("--quotas", type=_rational_list, required=True, help="e.g. 50,50")
    p.add_argument("--times", type=_int_list, required=True, help="e.g. 1,2")
    p = verb("arbitrage", _arbitrage, "arbitrage test for a loan collection", flow=False)
    p.add_argument("cash_flows", nargs="*")
    verb("payoff", _payoff, "payoff amounts", rate=True)
    verb("annuity", _annuity, "constant-installment loan", flow=False, rate=True, horizon=True)
    verb("critical-rate", _critical_rate, "critical rate a_n", flow=False, tol=True, horizon=True)
    p = verb("profile", _profile, "payoff profile of the annuity", flow=False, rate=True,
             horizon=True)
    p.add_argument("--compare", action="store_true", help="add the compound-interest baseline")
    verb("compare-compound", _compare_compound, "compound-interest balance profile",
         flow=False, rate=True, horizon=True)
    return parser


def _protect_negative(argv: Sequence[str]) -> list[str]:
    """Keep argparse from reading cash flows like ``-100+5t`` as options."""
    out = []
    for a in argv:
        if len(a) > 1 and a[0] == "-" and (a[1].isdigit() or a[1] in ".ty"):
            a = " " + a
        out.append(a)
    return out


def _envelope(status: str, payload, diagnostics) -> str:
    return json.dumps(
        {"status": status, "payload": payload, "diagnostics": diagnostics},
        sort_keys=True,
        indent=2,
    )


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative(argv))
        if args.format == "csv" and args.verb not in TABULAR:
            raise UsageError(f"verb {args.verb!r} has no tabular output")
    except UsageError as exc:
        diag = {"error": "UsageError", "message": str(exc), "usage": parser.format_usage().strip()}
        stdout.write(_envelope("error", None, [diag]) + "\n")
        return 2
    try:
        payload, rows = args.func(args)
    except LoanConeError as exc:
        diag = {"error": exc.name, "message": str(exc)}
        if hasattr(exc, "position"):
            diag["position"] = exc.position
        if getattr(exc, "residual", None) is not None:
            diag["residual"] = str(exc.residual)
        stdout.write(_envelope("error", None, [diag]) + "\n")
        return 1
    if args.format == "csv":
        stdout.write(_csv(rows))
    else:
        stdout.write(_envelope("ok", payload, []) + "\n")
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
