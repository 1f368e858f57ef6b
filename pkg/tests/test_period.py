import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from decperiod.arith import powmod
from decperiod.errors import (
    NotPrime,
    OracleRangeExceeded,
    OutOfRange,
    UnsupportedPrime,
    WordOverflow,
)
from decperiod.factor import factorize
from decperiod.period import (
    PeriodInfo,
    _long_division_cycle,
    compute_m_p,
    iter_oracle,
    l_prime_power,
    naive_period_oracle,
    order_prime,
    period_length,
    prime_record,
)

from conftest import sieve_flags

PRIMES_1E5 = [p for p, flag in enumerate(sieve_flags(10**5)) if flag]


def sequential_order(p):
    """Smallest k >= 1 with 10**k == 1 mod p, by stepping through powers."""
    k, r = 1, 10 % p
    while r != 1:
        r = r * 10 % p
        k += 1
    return k


@pytest.mark.parametrize("p, expected", [(7, 6), (11, 2), (13, 6), (3, 1)])
def test_order_prime_examples(p, expected):
    assert order_prime(p) == expected


def test_order_487_matches_oracle():
    assert naive_period_oracle(487).period == 486
    assert order_prime(487) == 486


def test_order_prime_errors():
    with pytest.raises(NotPrime):
        order_prime(9)
    with pytest.raises(UnsupportedPrime):
        order_prime(2)
    with pytest.raises(UnsupportedPrime):
        compute_m_p(5)


def test_order_prime_matches_sequential_search():
    for p in PRIMES_1E5[:600]:
        if p in (2, 5):
            continue
        assert order_prime(p) == sequential_order(p), p


@pytest.mark.parametrize("p, expected", [(3, 1), (7, 0), (11, 0), (487, 1), (13, 0)])
def test_m_p_examples(p, expected):
    assert compute_m_p(p) == expected


def test_m_p_by_exact_valuation():
    # valuation of 10**l_p - 1 computed on the exact integer
    for p in PRIMES_1E5[:200]:
        if p in (2, 5):
            continue
        value = 10 ** order_prime(p) - 1
        e = 0
        while value % p == 0:
            value //= p
            e += 1
        assert compute_m_p(p) == e - 1, p


def test_m_p_overflow_reported():
    # no known base-10 prime reaches the wide limit; base p**2 + 1 is 1 mod p**2,
    # so the lift must try p**3 > 2**127
    from decperiod.period import _lift

    p = 2**61 - 1
    with pytest.raises(WordOverflow):
        _lift(p, 1, p * p + 1)


@pytest.mark.parametrize("p, k, expected", [(7, 2, 42), (3, 3, 3), (5, 3, 1), (3, 2, 1), (2, 10, 1), (3, 4, 9)])
def test_l_prime_power_examples(p, k, expected):
    assert l_prime_power(p, k) == expected


def test_l_prime_power_errors():
    with pytest.raises(NotPrime):
        l_prime_power(4, 2)
    with pytest.raises(ValueError):
        l_prime_power(7, 0)


@pytest.mark.parametrize(
    "n, preperiod, period",
    [(42, 1, 6), (90, 1, 1), (2310, 1, 6), (1, 0, 1), (7, 0, 6), (49, 0, 42), (40, 3, 1), (125, 3, 1)],
)
def test_period_length_examples(n, preperiod, period):
    info = period_length(n)
    assert (info.preperiod, info.period) == (preperiod, period)


def test_period_length_out_of_range():
    with pytest.raises(OutOfRange):
        period_length(0)
    with pytest.raises(OutOfRange):
        period_length(2**63)


def test_period_length_large_input():
    n = 999999999989 * 9973
    info = period_length(n)
    assert powmod(10, info.period, n) == 1
    for q, _ in factorize(info.period):
        assert powmod(10, info.period // q, n) != 1


@pytest.mark.parametrize(
    "n, expected",
    [
        (7, PeriodInfo(7, 7, 0, 6)),
        (49, PeriodInfo(49, 49, 0, 42)),
        (40, PeriodInfo(40, 1, 3, 1)),
        (1, PeriodInfo(1, 1, 0, 1)),
        (90, PeriodInfo(90, 9, 1, 1)),
    ],
)
def test_oracle_examples(n, expected):
    assert naive_period_oracle(n) == expected


def test_oracle_cap():
    with pytest.raises(OracleRangeExceeded):
        naive_period_oracle(10**7 + 1)
    with pytest.raises(OutOfRange):
        naive_period_oracle(0)


def test_compiled_oracle_matches_interpreted():
    for n in range(1, 3000):
        buf = np.full(n, -1, dtype=np.int32)
        assert _long_division_cycle(n, buf) == _long_division_cycle.py_func(n, buf.copy())
        assert (buf == -1).all()


def test_oracle_equivalence_prefix():
    for slow in iter_oracle(range(1, 5001)):
        assert period_length(slow.n) == slow


@given(st.integers(min_value=2, max_value=10**12))
@settings(max_examples=300)
def test_order_minimality(n):
    info = period_length(n)
    c = info.coprime_part
    assert c % 2 and c % 5
    assert info.preperiod == max(
        next(e for e in range(64) if n % 2 ** (e + 1)),
        next(e for e in range(64) if n % 5 ** (e + 1)),
    )
    if c == 1:
        assert info.period == 1
        return
    assert powmod(10 % c, info.period, c) == 1
    for d in range(1, math.isqrt(info.period) + 1):
        if info.period % d == 0:
            for proper in {d, info.period // d} - {info.period}:
                assert powmod(10 % c, proper, c) != 1


def test_order_divides_p_minus_1():
    for p in PRIMES_1E5:
        if p not in (2, 5):
            assert (p - 1) % order_prime(p) == 0, p


def test_prime_power_step_is_1_or_p():
    for p in [p for p in PRIMES_1E5 if p < 100 and p not in (2, 5)]:
        for k in range(1, 5):
            if p ** (k + 1) > 10**7:
                break
            lo, hi = l_prime_power(p, k), l_prime_power(p, k + 1)
            assert hi in (lo, p * lo)
            assert hi % lo == 0


def test_second_power_when_m_p_is_zero():
    for p in PRIMES_1E5:
        if p > 1000:
            break
        if p in (2, 5):
            continue
        if compute_m_p(p) == 0:
            assert l_prime_power(p, 2) == p * order_prime(p)
    assert compute_m_p(3) == 1
    assert l_prime_power(3, 2) == order_prime(3) == 1


def test_multiplicativity_on_coprime_pairs():
    rng = random.Random(35)
    checked = 0
    while checked < 1000:
        a = rng.randint(1, 1000)
        b = rng.randint(1, 10**5 // a)
        if math.gcd(a, b) != 1:
            continue
        assert period_length(a * b).period == math.lcm(period_length(a).period, period_length(b).period)
        checked += 1


@pytest.mark.parametrize(
    "p, record",
    [(7, (6, 0, True, False)), (11, (2, 0, False, False)), (3, (1, 1, False, False)), (5, (1, 0, False, True))],
)
def test_prime_record(p, record):
    r = prime_record(p)
    assert (r.l_p, r.m_p, r.full_reptend, r.terminating) == record


def test_prime_record_not_prime():
    with pytest.raises(NotPrime):
        prime_record(91)
