"""
Full-reptend primes and positive m_p
====================================

Two empirical scans. The share of primes for which 1/p has the longest
possible period p - 1 hovers near Artin's constant (about 0.374). Primes with
m_p > 0 are rare: below 10**6 only 3 and 487 appear.
"""

import numpy as np

from decperiod import probe_m_ge_2, scan_full_reptend, scan_wieferich_m

for limit in (10**3, 10**4, 10**5):
    report = scan_full_reptend(limit)
    print(f"limit {limit:>7}: {len(report.hits):>5} of {report.primes_examined:>5} primes, density {report.density:.4f}")

report = scan_full_reptend(10**5)
hits = np.array(report.hits)
print("first full-reptend primes:", hits[:10].tolist())

report = scan_wieferich_m(10**6)
print(f"m_p > 0 below 10**6: {list(report.hits)} ({report.elapsed_ms:.0f} ms)")

# The third known hit is far above the scan; check it directly, including m_p >= 2.
print("56598313 has m_p >= 2:", probe_m_ge_2(56598313))
