import math
import random

import pytest

from decperiod.arith import is_prime
from decperiod.errors import OutOfRange
from decperiod.factor import Factorization, factorize

from conftest import smallest_factor_table


def check_canonical(fac, n):
    assert fac.n == n
    primes = [p for p, _ in fac]
    assert primes == sorted(set(primes))
    assert all(is_prime(p) for p in primes)
    assert all(e >= 1 for _, e in fac)
    assert fac.value() == n
    assert (n == 1) == (len(fac) == 0)


def test_factorize_2310():
    assert factorize(2310).factors == ((2, 1), (3, 1), (5, 1), (7, 1), (11, 1))


def test_factorize_small():
    assert factorize(1).factors == ()
    assert factorize(49).factors == ((7, 2),)
    assert factorize(2**62).factors == ((2, 62),)


def test_factorize_1e18_plus_9():
    n = 10**18 + 9
    check_canonical(factorize(n), n)


@pytest.mark.parametrize(
    "n",
    [
        (2**31 - 1) * (2**31 - 1),
        1000003 * 1000033 * 1009,
        4294967291 * 2147483647,
        999999999989 * 9973,
        2**63 - 1,
        56598313**2,
    ],
)
def test_factorize_hard_composites(n):
    check_canonical(factorize(n), n)


def test_out_of_range():
    with pytest.raises(OutOfRange):
        factorize(0)
    with pytest.raises(OutOfRange):
        factorize(2**63)


def test_deterministic():
    n = 4294967291 * 2147483647
    assert factorize(n) == factorize(n)


def test_str():
    assert str(factorize(360)) == "360 = 2^3 * 3^2 * 5"
    assert isinstance(factorize(360), Factorization)


def test_agrees_with_trial_division_up_to_1e6():
    limit = 10**6
    spf = smallest_factor_table(limit)
    for n in range(1, limit + 1):
        expected = {}
        m = n
        while m > 1:
            p = spf[m]
            expected[p] = expected.get(p, 0) + 1
            m //= p
        got = factorize(n)
        assert got.factors == tuple(sorted(expected.items())), n


def test_round_trip_random_63_bit():
    rng = random.Random(20261018)
    for _ in range(10**4):
        n = rng.randrange(1, 2**63)
        fac = factorize(n)
        assert math.prod(p**e for p, e in fac) == n
        assert all(is_prime(p) for p, _ in fac)
