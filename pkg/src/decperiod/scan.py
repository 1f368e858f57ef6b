"""Prime scans: full-reptend primes and primes whose m_p is positive.

Primes come from a segmented sieve. Each segment is processed independently, so
a scan can be spread over worker processes; results are merged in segment order
and are identical for any worker count.
"""

import enum
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .arith import WIDE_MAX, is_prime, powmod_wide
from .errors import NotPrime, OutOfRange, UnsupportedPrime, WordOverflow
from .factor import factorize
from .period import compute_m_p, order_prime

SCAN_MAX = 10**8
SEGMENT_SIZE = 1 << 18
_EXCLUDED = (2, 5)


class ScanKind(enum.Enum):
    FULL_REPTEND = "full_reptend"
    WIEFERICH_M = "wieferich_m"


@dataclass(frozen=True)
class ScanReport:
    kind: ScanKind
    limit: int
    hits: tuple
    primes_examined: int
    density: Optional[float]
    elapsed_ms: float


def _sieve_small(bound):
    """Primes <= bound as an int64 array."""
    if bound < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(bound + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for i in range(3, math.isqrt(bound) + 1, 2):
        if flags[i]:
            flags[i * i :: 2 * i] = False
    return np.flatnonzero(flags).astype(np.int64)


def primes_in_segment(lo, hi, base_primes=None):
    """Primes in [lo, hi) by sieving with the primes up to sqrt(hi)."""
    lo = max(lo, 2)
    if hi <= lo:
        return np.empty(0, dtype=np.int64)
    if base_primes is None:
        base_primes = _sieve_small(math.isqrt(hi - 1))
    flags = np.ones(hi - lo, dtype=bool)
    for p in base_primes:
        p = int(p)
        if p * p >= hi:
            break
        start = max(p * p, -(-lo // p) * p)
        flags[start - lo :: p] = False
    return np.flatnonzero(flags).astype(np.int64) + lo


def iter_primes(limit, segment_size=SEGMENT_SIZE):
    """Yield primes <= limit, ascending, one numpy array per segment."""
    base = _sieve_small(math.isqrt(limit))
    for lo in range(2, limit + 1, segment_size):
        yield primes_in_segment(lo, min(lo + segment_size, limit + 1), base)


def is_full_reptend(p):
    """10 generates the units mod p, i.e. the period of 1/p is p - 1."""
    for q, _ in factorize(p - 1):
        if pow(10, (p - 1) // q, p) == 1:
            return False
    return True


def _has_positive_m(p):
    # m_p > 0 iff p^2 | 10^(p-1) - 1, since l_p | p - 1; confirm survivors exactly
    if pow(10, p - 1, p * p) != 1:
        return False
    return compute_m_p(p) > 0


_TESTS = {
    ScanKind.FULL_REPTEND: is_full_reptend,
    ScanKind.WIEFERICH_M: _has_positive_m,
}


def _scan_segment(kind, lo, hi):
    test = _TESTS[kind]
    hits = []
    examined = 0
    for p in primes_in_segment(lo, hi).tolist():
        if p in _EXCLUDED:
            continue
        examined += 1
        if test(p):
            hits.append(p)
    return hits, examined


def _run_scan(kind, limit, workers, segment_size):
    if not 3 <= limit <= SCAN_MAX:
        raise OutOfRange(f"scan limit must be in [3, {SCAN_MAX}], got {limit}")
    started = time.perf_counter()
    bounds = [(lo, min(lo + segment_size, limit + 1)) for lo in range(2, limit + 1, segment_size)]
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_segment, [kind] * len(bounds), *zip(*bounds)))
    else:
        parts = [_scan_segment(kind, lo, hi) for lo, hi in bounds]
    hits = tuple(p for seg_hits, _ in parts for p in seg_hits)
    examined = sum(n for _, n in parts)
    density = len(hits) / examined if kind is ScanKind.FULL_REPTEND and examined else None
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return ScanReport(kind, limit, hits, examined, density, elapsed_ms)


def scan_full_reptend(limit, workers=1, segment_size=SEGMENT_SIZE):
    """Primes p <= limit (other than 2 and 5) whose 1/p has period p - 1."""
    return _run_scan(ScanKind.FULL_REPTEND, limit, workers, segment_size)


def scan_wieferich_m(limit, workers=1, segment_size=SEGMENT_SIZE):
    """Primes p <= limit with m_p > 0, i.e. p**2 divides 10**l_p - 1.

    A Fermat-quotient filter (10**(p-1) mod p**2) discards almost every prime
    before the order is computed.
    """
    return _run_scan(ScanKind.WIEFERICH_M, limit, workers, segment_size)


def probe_m_ge_2(p):
    """True iff p**3 divides 10**l_p - 1 (m_p >= 2)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p in _EXCLUDED:
        raise UnsupportedPrime(f"1/{p} terminates")
    cube = p**3
    if cube > WIDE_MAX:
        raise WordOverflow(f"{p}^3 exceeds 2**127 - 1")
    return powmod_wide(10 % cube, order_prime(p), cube) == 1
