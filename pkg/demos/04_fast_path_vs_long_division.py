"""
Factorization route versus long division
========================================

Long division needs time proportional to the period, up to n steps. The
factorization route costs a factorization plus a few modular exponentiations.
"""

from decperiod.bench import compare, sample_inputs

ns = sample_inputs(50, 10**6, 10**7, seed=1)
result = compare(ns)
print(f"fast path:     {result.fast_seconds * 1e3:8.2f} ms")
print(f"long division: {result.naive_seconds * 1e3:8.2f} ms")
print(f"speedup:       {result.speedup:8.1f}x, mismatches: {result.mismatches}")
