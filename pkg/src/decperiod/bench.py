"""Timing comparison of the factorization path against the long-division oracle."""

import random
import time
from dataclasses import dataclass

from . import period
from .period import ORACLE_CAP, iter_oracle, period_length


@dataclass(frozen=True)
class BenchResult:
    samples: tuple
    fast_seconds: float
    naive_seconds: float
    mismatches: int

    @property
    def speedup(self):
        return self.naive_seconds / self.fast_seconds if self.fast_seconds else float("inf")


def sample_inputs(count, lo, hi, seed):
    """``count`` integers drawn uniformly from [lo, hi] by a seeded generator."""
    hi = min(hi, ORACLE_CAP)
    if lo > hi:
        raise ValueError(f"empty sample range [{lo}, {hi}]")
    rng = random.Random(seed)
    return tuple(rng.randint(lo, hi) for _ in range(count))


def compare(ns):
    """Time period_length and the oracle over the same inputs.

    The order cache is cleared first and the oracle kernel is compiled before
    timing starts, so neither side is charged for one-off setup.
    """
    ns = tuple(ns)
    period._cached_order.cache_clear()
    period.naive_period_oracle(2)

    t0 = time.perf_counter()
    fast = [period_length(n) for n in ns]
    t1 = time.perf_counter()
    slow = list(iter_oracle(ns))
    t2 = time.perf_counter()
    mismatches = sum(a != b for a, b in zip(fast, slow))
    return BenchResult(ns, t1 - t0, t2 - t1, mismatches)
