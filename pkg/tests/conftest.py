from fractions import Fraction

from hypothesis import strategies as st

from loancone import CashFlow, from_partition

small_fractions = st.builds(
    Fraction, st.integers(-10_000, 10_000), st.integers(1, 200)
)
positive_fractions = st.builds(Fraction, st.integers(1, 5_000), st.integers(1, 200))
rates = st.builds(Fraction, st.integers(1, 400), st.integers(1, 200))


@st.composite
def cash_flows(draw, max_time=12, values=small_fractions):
    coeffs = draw(st.dictionaries(st.integers(0, max_time), values, max_size=8))
    return CashFlow(coeffs)


@st.composite
def transactions(draw, max_time=12):
    principal = draw(st.one_of(st.just(Fraction(0)), positive_fractions))
    inst = draw(st.dictionaries(st.integers(1, max_time), positive_fractions, max_size=6))
    return CashFlow({0: -principal, **inst})


@st.composite
def loans(draw, max_time=12):
    principal = draw(positive_fractions)
    inst = draw(st.dictionaries(st.integers(1, max_time), positive_fractions, min_size=1, max_size=6))
    total = sum(inst.values())
    # rescale so the installments cover the principal
    if total < principal:
        k = draw(st.sampled_from(sorted(inst)))
        inst[k] += principal - total + draw(st.sampled_from([Fraction(0), Fraction(1, 3)]))
    return CashFlow({0: -principal, **inst})


@st.composite
def members(draw, rate=None, max_time=12, min_terms=1):
    """A random element of S_x together with its rate, quotas and times."""
    x = draw(rates) if rate is None else rate
    times = sorted(draw(st.sets(st.integers(1, max_time), min_size=min_terms, max_size=6)))
    quotas = [draw(positive_fractions) for _ in times]
    principal = sum(quotas)
    return from_partition(principal, quotas, times, x), x, quotas, times


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
