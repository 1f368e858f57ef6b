"""Integer kernels: gcd/lcm, modular multiplication and exponentiation, p-adic
valuation and a deterministic Miller-Rabin test.

Two modulus widths are supported. The standard path accepts moduli up to
``WORD_MAX`` (2**63 - 1); the wide path goes to ``WIDE_MAX`` (2**127 - 1) and
exists for lifting orders to p**2, p**3, ... when p itself is near word size.
Python integers never overflow, so the width limits are enforced explicitly to
keep the supported range identical to a fixed-width implementation.
"""

import math

from .errors import WordOverflow

WORD_MAX = 2**63 - 1
WIDE_MAX = 2**127 - 1

# Deterministic for every n < 3.3e24, which covers all 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def gcd(a, b):
    """Greatest common divisor of two nonnegative integers; gcd(0, 0) == 0."""
    return math.gcd(a, b)


def lcm_checked(a, b):
    """Least common multiple of ``a`` and ``b``.

    Raises WordOverflow when the result does not fit in ``WORD_MAX``.
    """
    if a < 1 or b < 1:
        raise ValueError(f"lcm_checked needs positive arguments, got {a}, {b}")
    result = a // math.gcd(a, b) * b
    if result > WORD_MAX:
        raise WordOverflow(f"lcm({a}, {b}) = {result} exceeds 2**63 - 1")
    return result


def _check_modulus(m, limit):
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if m > limit:
        raise WordOverflow(f"modulus {m} exceeds {limit.bit_length()}-bit range")


def mulmod(a, b, m):
    _check_modulus(m, WORD_MAX)
    return (a * b) % m


def powmod(base, exp, m):
    """``base**exp mod m`` for a standard-width modulus."""
    _check_modulus(m, WORD_MAX)
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exp, m)


def powmod_wide(base, exp, m):
    """Same as :func:`powmod` but for moduli up to 2**127 - 1."""
    _check_modulus(m, WIDE_MAX)
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base, exp, m)


def valuation(n, p):
    """Split ``n`` as ``p**e * cofactor`` with ``p`` not dividing ``cofactor``.

    >>> valuation(90, 3)
    (2, 10)
    """
    if n < 1:
        raise ValueError(f"valuation needs n >= 1, got {n}")
    if p < 2:
        raise ValueError(f"valuation needs p >= 2, got {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def is_prime(n):
    """Miller-Rabin with a fixed base set; exact for all n < 2**64."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
