"""Decimal period lengths.

The fast path follows the factorization route: factor ``n``, get the order of
10 modulo each prime, lift it to the prime power through the exponent ``m_p``
(the number of extra factors of p in the period integer of 1/p), and take the
lcm over the prime powers. ``naive_period_oracle`` is the slow
long-division reference that every fast result is checked against.

Terminating decimals have period 1 (the digit 0 repeating), so the lcm
composition holds unchanged for denominators containing 2s and 5s.
"""

from dataclasses import dataclass
from functools import lru_cache

import numba
import numpy as np

from .arith import (
    WIDE_MAX,
    WORD_MAX,
    is_prime,
    lcm_checked,
    powmod,
    powmod_wide,
    valuation,
)
from .errors import (
    NotPrime,
    OracleRangeExceeded,
    OutOfRange,
    UnsupportedPrime,
    WordOverflow,
)
from .factor import factorize

BASE = 10
ORACLE_CAP = 10**7


@dataclass(frozen=True)
class PeriodInfo:
    n: int
    coprime_part: int
    preperiod: int
    period: int


@dataclass(frozen=True)
class PrimePeriodRecord:
    """Per-prime table row. For p in {2, 5}: l_p = 1, m_p = 0, terminating set."""

    p: int
    l_p: int
    m_p: int
    full_reptend: bool
    terminating: bool = False


def _base_primes(base):
    return tuple(p for p, _ in factorize(base))


def _check_odd_prime(p, base=BASE):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if base % p == 0:
        raise UnsupportedPrime(f"1/{p} terminates in base {base}; order and m_p are undefined")


def _order_mod_prime(p, base):
    # start from p - 1 and strip each prime factor while the power stays 1
    d = p - 1
    for q, _ in factorize(p - 1):
        while d % q == 0 and powmod(base % p, d // q, p) == 1:
            d //= q
    return d


@lru_cache(maxsize=1 << 14)
def _cached_order(p, base):
    return _order_mod_prime(p, base)


def _lift(p, order, base, cap=None):
    """Largest e >= 1 with p**e | base**order - 1, stopping early at ``cap``."""
    e = 1
    mod = p
    while cap is None or e < cap:
        nxt = mod * p
        if nxt > WIDE_MAX:
            raise WordOverflow(f"lifting {p} needs modulus {p}^{e + 1} beyond 2**127 - 1")
        if powmod_wide(base % nxt, order, nxt) != 1:
            break
        e += 1
        mod = nxt
    return e


def order_prime(p):
    """Order of 10 modulo the prime ``p`` (period length of 1/p).

    >>> order_prime(7), order_prime(11), order_prime(13)
    (6, 2, 6)
    """
    _check_odd_prime(p)
    return _cached_order(p, BASE)


def compute_m_p(p):
    """Exponent of ``p`` in the period integer c_p = (10**l_p - 1) / p."""
    _check_odd_prime(p)
    return _lift(p, _cached_order(p, BASE), BASE) - 1


def _prime_power_period(p, k, base):
    if base % p == 0:
        return 1
    l_p = _cached_order(p, base)
    if k == 1:
        return l_p
    # only need to know whether m_p + 1 reaches k
    e = _lift(p, l_p, base, cap=k)
    result = l_p * p ** max(0, k - e)
    if result > WORD_MAX:
        raise WordOverflow(f"period of {p}^{k} exceeds 2**63 - 1")
    return result


def l_prime_power(p, k):
    """Period length of 1/p**k.

    Equal to l_p while k <= m_p + 1, then multiplied by p for each further power.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    return _prime_power_period(p, k, BASE)


def _period_info(n, base):
    if not 1 <= n <= WORD_MAX:
        raise OutOfRange(f"n must satisfy 1 <= n < 2**63, got {n}")
    fac = factorize(n)
    strip = _base_primes(base)
    preperiod = 0
    coprime = n
    period = 1
    for p, k in fac:
        if p in strip:
            preperiod = max(preperiod, k)
            coprime //= p**k
        else:
            period = lcm_checked(period, _prime_power_period(p, k, base))
    return PeriodInfo(n, coprime, preperiod, period)


def period_length(n):
    """Preperiod and period of 1/n via factorization and lcm of prime-power periods.

    >>> period_length(2310)
    PeriodInfo(n=2310, coprime_part=231, preperiod=1, period=6)
    """
    return _period_info(n, BASE)


def prime_record(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if BASE % p == 0:
        return PrimePeriodRecord(p, 1, 0, False, terminating=True)
    l_p = order_prime(p)
    return PrimePeriodRecord(p, l_p, compute_m_p(p), l_p == p - 1)


@numba.njit(cache=True)
def _long_division_cycle(n, seen):
    """Walk r <- 10 r mod n from r = 1 until a remainder repeats.

    ``seen`` must hold -1 in its first n slots; on return the visited slots are
    reset to -1 so the buffer can be reused. Returns (cycle start, cycle length).
    """
    r = 1 % n
    k = 0
    while seen[r] < 0:
        seen[r] = k
        k += 1
        r = (r * 10) % n
    start = seen[r]
    # second walk restores the buffer
    r = 1 % n
    for _ in range(k):
        seen[r] = -1
        r = (r * 10) % n
    return start, k - start


def _strip_2_5(n):
    for q in (2, 5):
        while n % q == 0:
            n //= q
    return n


def naive_period_oracle(n, _buffer=None):
    """Period information for 1/n by plain long division (O(n) time and memory).

    Reference implementation for checking :func:`period_length`; capped at
    ``n <= 10**7``.
    """
    if n < 1:
        raise OutOfRange(f"oracle needs n >= 1, got {n}")
    if n > ORACLE_CAP:
        raise OracleRangeExceeded(f"oracle is capped at n <= {ORACLE_CAP}, got {n}")
    seen = _buffer if _buffer is not None else np.full(n, -1, dtype=np.int32)
    start, length = _long_division_cycle(n, seen)
    return PeriodInfo(n, _strip_2_5(n), int(start), int(length))


def iter_oracle(ns):
    """Yield ``naive_period_oracle(n)`` for each n, sharing one scratch buffer."""
    ns = list(ns)
    if not ns:
        return
    top = max(ns)
    if top > ORACLE_CAP:
        raise OracleRangeExceeded(f"oracle is capped at n <= {ORACLE_CAP}, got {top}")
    buf = np.full(max(top, 1), -1, dtype=np.int32)
    for n in ns:
        yield naive_period_oracle(n, _buffer=buf)
