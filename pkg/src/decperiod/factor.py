"""Prime factorization of integers below 2**63.

Trial division by the primes under 10**4 strips small factors; whatever is
left is split with Brent's variant of Pollard rho and certified with
Miller-Rabin.
"""

import math
from collections import Counter
from dataclasses import dataclass

from .arith import WORD_MAX, is_prime
from .errors import OutOfRange

TRIAL_BOUND = 10**4


def _small_primes(bound):
    sieve = bytearray([1]) * bound
    sieve[:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, bound, i)))
    return [i for i in range(bound) if sieve[i]]


SMALL_PRIMES = _small_primes(TRIAL_BOUND)


@dataclass(frozen=True)
class Factorization:
    """``n`` together with its ``(prime, exponent)`` pairs, primes ascending."""

    n: int
    factors: tuple

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def primes(self):
        return [p for p, _ in self.factors]

    def value(self):
        return math.prod(p**e for p, e in self.factors)

    def __str__(self):
        if not self.factors:
            return f"{self.n} = 1"
        terms = [str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors]
        return f"{self.n} = " + " * ".join(terms)


def _brent(n, c, y0):
    """One Pollard-Brent run; returns a divisor of n, possibly n itself."""
    y, r, q, g = y0, 1, 1, 1
    m = 128
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        # batched product hit zero; walk back one step at a time
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g


def _split(n):
    """A nontrivial divisor of the odd composite ``n``."""
    r = math.isqrt(n)
    if r * r == n:
        return r
    y0 = 2 + n % 31
    c = 1
    while True:
        d = _brent(n, c, y0)
        if 1 < d < n:
            return d
        c += 1


def _factor_large(n, counts):
    stack = [n]
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] += 1
            continue
        d = _split(m)
        stack.extend((d, m // d))


def factorize(n):
    """Canonical factorization of ``1 <= n < 2**63``.

    >>> factorize(2310).factors
    ((2, 1), (3, 1), (5, 1), (7, 1), (11, 1))
    """
    if not 1 <= n <= WORD_MAX:
        raise OutOfRange(f"factorize needs 1 <= n < 2**63, got {n}")
    counts = Counter()
    rem = n
    for q in SMALL_PRIMES:
        if q * q > rem:
            break
        while rem % q == 0:
            rem //= q
            counts[q] += 1
    if rem > 1:
        if rem < TRIAL_BOUND * TRIAL_BOUND:
            counts[rem] += 1
        else:
            _factor_large(rem, counts)
    return Factorization(n, tuple(sorted(counts.items())))
