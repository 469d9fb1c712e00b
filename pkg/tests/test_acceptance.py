"""Exit criteria for the package, one test per criterion.

Each test prints a single PASS/FAIL line; a summary of all criteria is also
written at the end of the pytest run.
"""

import itertools
import random
from fractions import Fraction

import pytest

from loancone import (
    CashFlow,
    Shape,
    classify,
    critical_rate,
    decompose,
    format_cashflow,
    from_partition,
    is_arbitrage_free,
    membership,
    parse,
    payoff_polynomial,
    payoff_profile,
    solve_rate,
    split_mutuum_arbitrage,
)
from oracles import hull_has_arbitrage

TENTH = Fraction(1, 10)


def report(n, ok, detail=""):
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_golden_ratio():
    cr = critical_rate(2, Fraction("1e-12"))
    lo, hi = cr.enclosure.lo, cr.enclosure.hi
    # (1+sqrt 5)/2 is the positive root of x^2 - x - 1
    encloses = lo * lo - lo - 1 <= 0 <= hi * hi - hi - 1
    err = abs(cr.midpoint - Fraction("1.6180339887498949"))
    report(1, encloses and cr.width <= Fraction("1e-12") and err <= Fraction("1e-12"),
           f"midpoint error {float(err):.3e}")


def test_criterion_02_decreasing_critical_rates():
    mids = [critical_rate(n, Fraction("1e-10")).midpoint for n in range(2, 51)]
    bad = [n for n, (a, b) in enumerate(zip(mids, mids[1:]), start=2) if not a > b]
    report(2, not bad, f"a_2..a_50 from {float(mids[0]):.6f} to {float(mids[-1]):.6f}")


def test_criterion_03_worked_examples_exact():
    a = parse("-100+55t+60t^2")
    m1 = membership(a, TENTH)
    m2 = membership(parse("-100+10t+110t^2"), TENTH)
    dec = decompose(a, TENTH)
    split = split_mutuum_arbitrage(a, TENTH)
    ok = (
        m1.member and m1.residual == 0
        and not m2.member
        and dec.quotas == (50, 50)
        and split.mutuum == parse("-100+50t+50t^2")
        and split.arbitrage == parse("5t+10t^2")
    )
    report(3, ok)


def test_criterion_04_implied_rate():
    enc = solve_rate(parse("-100+10t+110t^2"), Fraction("1e-9"))
    target = Fraction("0.1047404277")
    slack = Fraction("5e-10")
    ok = enc.width <= Fraction("1e-9") and enc.lo - slack <= target <= enc.hi + slack
    report(4, ok, f"enclosure [{float(enc.lo):.12f}, {float(enc.hi):.12f}] vs {float(target)}")


def test_criterion_05_arbitrage_witness():
    r = is_arbitrage_free([parse("-1+5t"), parse("-1+2t")])
    ok = not r.free and r.flow.support == (1,) and r.flow[1] > 0
    report(5, ok, f"flow {format_cashflow(r.flow) if r.flow else None}")


def _random_partition(rng, principal, max_time):
    times = sorted(rng.sample(range(1, max_time + 1), rng.randint(1, min(6, max_time))))
    weights = [Fraction(rng.randint(1, 50), rng.randint(1, 9)) for _ in times]
    total = sum(weights)
    return [w * principal / total for w in weights], times


def test_criterion_06_no_arbitrage_sampling():
    rng = random.Random(6)
    failures = 0
    for _ in range(1000):
        x = Fraction(rng.randint(1, 200), 100)
        principal = Fraction(rng.randint(1, 1000), rng.randint(1, 7))
        max_time = rng.randint(1, 12)
        qa, ta = _random_partition(rng, principal, max_time)
        qb, tb = _random_partition(rng, principal, max_time)
        alpha = from_partition(principal, qa, ta, x)
        beta = from_partition(principal, qb, tb, x)
        diff = alpha - beta
        assert diff[0] == 0
        failures += classify(diff).is_arbitrage
    report(6, failures == 0, f"{failures} arbitrages in 1000 pairs")


def test_criterion_07_payoff_no_arbitrage():
    rng = random.Random(7)
    failures = 0
    for _ in range(200):
        x = Fraction(rng.randint(1, 200), rng.randint(1, 100))
        principal = Fraction(rng.randint(1, 1000), rng.randint(1, 7))
        times = sorted(rng.sample(range(1, 13), rng.randint(1, 6)))
        if times[-1] < 2:
            times = [1, rng.randint(2, 12)]
        quotas = [Fraction(rng.randint(1, 30)) for _ in times]
        quotas = [q * principal / sum(quotas) for q in quotas]
        alpha = from_partition(principal, quotas, times, x)
        sched = payoff_polynomial(alpha, x)
        for k, _ in sched.values:
            failures += membership(sched.truncated(k), x).residual != 0
        failures += sched.terminal() != 0
    report(7, failures == 0, f"{failures} violations")


def test_criterion_08_critical_rate_grid():
    eps = Fraction("1e-6")
    violations = []
    for n in range(2, 21):
        enc = critical_rate(n, Fraction("1e-10")).enclosure
        below = payoff_profile(enc.lo - eps, n).profile[0]
        above = payoff_profile(enc.hi + eps, n).profile[0]
        if not (below < 1 < above):
            violations.append(("threshold", n))
    for n in range(3, 21):
        for i in range(1, 21):
            x = Fraction(i, 10)
            rep = payoff_profile(x, n)
            prof = rep.profile
            if rep.shape not in (Shape.DECREASING, Shape.UNIMODAL):
                violations.append(("shape", n, x))
            diffs = [b - a for a, b in zip(prof, prof[1:])]
            for d1, d2 in zip(diffs, diffs[1:]):
                if d1 < 0 and d2 >= 0:
                    violations.append(("rise after fall", n, x))
            if prof[0] < 1 and not prof[1] < prof[0]:
                violations.append(("first case", n, x))
    report(8, not violations, f"{len(violations)} violations")


def test_criterion_09_corrected_worked_example():
    sched = payoff_polynomial(parse("-100+55t+36t^2+26t^3"), TENTH)
    # As printed, the example has 48t^2, which is not in S_0.1 (residual -10),
    # so the schedule 55t+24t^2 belongs to the coefficient 36.
    printed = membership(parse("-100+55t+48t^2+26t^3"), TENTH)
    ok = sched.as_cashflow() == parse("55t+24t^2") and printed.residual == -10
    report(9, ok, "typo: printed coefficient 48 fails membership; 36 reproduces 55t+24t^2")


def _small_loans():
    out = []
    for a0 in range(-3, 0):
        for inst in itertools.product(range(0, 4), repeat=3):
            if sum(inst) >= -a0:
                out.append(CashFlow({0: a0, 1: inst[0], 2: inst[1], 3: inst[2]}))
    return out


@pytest.mark.slow
def test_criterion_10_lp_matches_fourier_motzkin():
    loans = _small_loans()
    assert all(classify(a).is_loan for a in loans)
    checked = disagreements = 0
    for triple in itertools.combinations(loans, 3):
        checked += 1
        if is_arbitrage_free(triple).free == hull_has_arbitrage(triple):
            disagreements += 1
    report(10, disagreements == 0 and checked == 908_600,
           f"{checked} triples of {len(loans)} loans, {disagreements} disagreements")


def _random_cash_flow(rng):
    coeffs = {}
    for _ in range(rng.randint(0, 8)):
        k = rng.randint(0, 60)
        kind = rng.random()
        if kind < 0.4:
            v = Fraction(rng.randint(-10**6, 10**6))
        elif kind < 0.8:
            v = Fraction(rng.randint(-10**4, 10**4), rng.randint(1, 10**4))
        else:
            v = Fraction(rng.choice([-1, 1]))
        coeffs[k] = v
    return CashFlow(coeffs)


def test_criterion_11_parser_round_trip():
    rng = random.Random(11)
    failures = sum(
        parse(format_cashflow(cf)) != cf for cf in (_random_cash_flow(rng) for _ in range(10_000))
    )
    report(11, failures == 0, f"{failures} round-trip failures in 10000")
