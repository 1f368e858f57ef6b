"""Exact decimal expansions of q/n as digit strings.

Digit strings are the storage format for period integers such as c_49 (42
digits), so nothing here needs more than the period length to be known.
"""

import math
from dataclasses import dataclass

from .arith import WORD_MAX, is_prime
from .errors import NotPrime, OutOfRange, UnsupportedPrime
from .period import period_length

_CHUNK = 18
_CHUNK_POW = 10**_CHUNK
_STR_CHUNK = 4000


@dataclass(frozen=True)
class ExpansionInfo:
    """q/n written as integer_part . preperiod_digits (period_digits) repeating.

    ``period_digits`` is empty exactly when the expansion terminates.
    """

    numerator: int
    denominator: int
    integer_part: int
    preperiod_digits: str
    period_digits: str

    @property
    def terminates(self):
        return not self.period_digits

    @property
    def period(self):
        """Period length with terminating expansions counted as 1."""
        return len(self.period_digits) or 1

    def __str__(self):
        return format_expansion(self)


def format_expansion(e, max_period_digits=None):
    """Human-readable form, e.g. ``0.0(238095)``; optionally truncates the period."""
    text = f"{e.integer_part}"
    if e.preperiod_digits or e.period_digits:
        text += "." + e.preperiod_digits
    if e.period_digits:
        digits = e.period_digits
        if max_period_digits is not None and len(digits) > max_period_digits:
            digits = digits[:max_period_digits] + f"…(truncated, full length {len(e.period_digits)})"
        text += f"({digits})"
    return text


def _digits(r, n, count):
    """Next ``count`` long-division digits of r/n and the remainder left over."""
    parts = []
    full, rest = divmod(count, _CHUNK)
    for _ in range(full):
        d, r = divmod(r * _CHUNK_POW, n)
        parts.append(str(d).zfill(_CHUNK))
    if rest:
        d, r = divmod(r * 10**rest, n)
        parts.append(str(d).zfill(rest))
    return "".join(parts), r


def expand(q, n):
    """Exact expansion of q/n.

    >>> e = expand(1, 42)
    >>> e.preperiod_digits, e.period_digits
    ('0', '238095')
    """
    if not 1 <= n <= WORD_MAX:
        raise OutOfRange(f"denominator must satisfy 1 <= n < 2**63, got {n}")
    if q < 0:
        raise OutOfRange(f"numerator must be nonnegative, got {q}")
    g = math.gcd(q, n)
    rq, rn = q // g, n // g
    integer_part, r = divmod(rq, rn)
    info = period_length(rn)
    pre, r = _digits(r, rn, info.preperiod)
    period = ""
    if info.coprime_part > 1:
        period, r_end = _digits(r, rn, info.period)
        assert r_end == r
    return ExpansionInfo(q, n, integer_part, pre, period)


def c_digits(p):
    """Period of 1/p as a zero-padded digit string (the integer c_p)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p in (2, 5):
        raise UnsupportedPrime(f"1/{p} terminates")
    return expand(1, p).period_digits


def digit_divisibility(digits, p):
    """Whether the decimal integer written as ``digits`` is divisible by ``p``."""
    if not digits or not digits.isdigit() or not digits.isascii():
        raise ValueError(f"expected a non-empty string of decimal digits, got {digits!r}")
    r = 0
    for i in range(0, len(digits), _CHUNK):
        chunk = digits[i : i + _CHUNK]
        r = (r * 10 ** len(chunk) + int(chunk)) % p
    return r == 0


def digits_to_int(digits):
    """Integer value of a digit string of any length ('' is 0)."""
    if len(digits) <= _STR_CHUNK:
        return int(digits) if digits else 0
    mid = len(digits) // 2
    lo = digits[mid:]
    return digits_to_int(digits[:mid]) * 10 ** len(lo) + digits_to_int(lo)


def reconstruct_check(e):
    """Check numerator/denominator == I + (P + R / (10**l - 1)) / 10**t exactly."""
    for s in (e.preperiod_digits, e.period_digits):
        if s and not (s.isdigit() and s.isascii()):
            return False
    t = len(e.preperiod_digits)
    head = e.integer_part * 10**t + digits_to_int(e.preperiod_digits)
    if not e.period_digits:
        return e.numerator * 10**t == e.denominator * head
    nines = 10 ** len(e.period_digits) - 1
    rhs = head * nines + digits_to_int(e.period_digits)
    return e.numerator * 10**t * nines == e.denominator * rhs
