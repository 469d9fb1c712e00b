from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import cash_flows
from loancone import CashFlow, ParseDiagnostic, format_cashflow, parse


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("-100+10t+110t^2", {0: -100, 1: 10, 2: 110}),
        ("0", {}),
        ("-100+120t^2", {0: -100, 2: 120}),
        ("-100 + 10 y + 110 y^2", {0: -100, 1: 10, 2: 110}),
        ("1.1t", {1: Fraction(11, 10)}),
        ("-1+1.2t^2", {0: -1, 2: Fraction(6, 5)}),
        ("1/3t^2", {2: Fraction(1, 3)}),
        ("t+t", {1: 2}),
        ("5t-5t", {}),
        ("+t^3", {3: 1}),
        ("-t", {1: -1}),
        ("2*t^2", {2: 2}),
        (".5", {0: Fraction(1, 2)}),
        ("3/6", {0: Fraction(1, 2)}),
    ],
)
def test_parse_examples(text, coeffs):
    assert parse(text) == CashFlow(coeffs)


@pytest.mark.parametrize(
    "text, position",
    [
        ("10t^", 4),
        ("", 0),
        ("   ", 3),
        ("10x", 2),
        ("1/0", 2),
        ("5t 3", 3),
        ("5+", 2),
        ("t^0", 2),
        ("1.", 2),
        ("--5", 1),
        ("^2", 0),
        ("2*", 2),
    ],
)
def test_parse_errors_are_positioned(text, position):
    with pytest.raises(ParseDiagnostic) as info:
        parse(text)
    assert info.value.position == position
    assert 0 <= info.value.position <= len(text)


@pytest.mark.parametrize(
    "coeffs, text",
    [
        ({0: -100, 1: 55, 2: 60}, "-100+55t+60t^2"),
        ({}, "0"),
        ({2: Fraction(1, 3)}, "1/3t^2"),
        ({1: -1, 4: 1}, "-t+t^4"),
        ({0: Fraction(-7, 3), 1: 1}, "-7/3+t"),
    ],
)
def test_format_examples(coeffs, text):
    assert format_cashflow(CashFlow(coeffs)) == text


@given(cash_flows(max_time=40))
def test_round_trip(cf):
    assert parse(format_cashflow(cf)) == cf


terms = st.tuples(
    st.sampled_from(["+", "-"]),
    st.one_of(st.none(), st.integers(0, 999).map(str), st.tuples(st.integers(0, 99), st.integers(1, 99)).map(lambda p: f"{p[0]}/{p[1]}"),
              st.tuples(st.integers(0, 99), st.integers(0, 99)).map(lambda p: f"{p[0]}.{p[1]}")),
    st.one_of(st.none(), st.sampled_from(["t", "y"])),
    st.one_of(st.none(), st.integers(1, 30)),
)


def _render(parts):
    out = []
    for sign, coeff, sym, exp in parts:
        if coeff is None and sym is None:
            coeff = "1"
        s = sign + (coeff or "")
        if sym:
            s += sym + (f"^{exp}" if exp else "")
        out.append(s)
    return " ".join(out)


@given(st.lists(terms, min_size=1, max_size=8))
def test_valid_strings_parse_and_reach_a_fixed_point(parts):
    text = _render(parts)
    once = format_cashflow(parse(text))
    assert format_cashflow(parse(once)) == once


@given(st.text(alphabet="0123456789ty+-^/.* xz", max_size=20))
def test_arbitrary_strings_parse_or_diagnose(text):
    try:
        parse(text)
    except ParseDiagnostic as exc:
        assert 0 <= exc.position <= len(text)
