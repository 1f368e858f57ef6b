"""
Period lengths from a factorization
===================================

The period of 1/n only depends on the part of n coprime to 10. Factor n, find
the order of 10 modulo each prime, lift it to the prime power, and combine
with an lcm.
"""

from decperiod import factorize, l_prime_power, order_prime, period_length

# Orders modulo small primes. 10**6 = 1 (mod 7), 10**2 = 1 (mod 11).
for p in (3, 7, 11, 13, 17):
    print(f"order of 10 mod {p:>2}: {order_prime(p)}")

# Prime powers: 1/49 repeats every 42 digits, 1/27 every 3.
print("l(7^2) =", l_prime_power(7, 2))
print("l(3^3) =", l_prime_power(3, 3))
print("l(5^3) =", l_prime_power(5, 3), "(terminating, counted as 1)")

# Composite denominators combine through the lcm of the prime-power periods.
for n in (42, 90, 2310):
    fac = factorize(n)
    parts = [l_prime_power(p, e) for p, e in fac]
    info = period_length(n)
    print(f"{fac}: prime-power periods {parts} -> period {info.period}, preperiod {info.preperiod}")

# Inputs far beyond the reach of long division are still instant.
big = 999999999989 * 9973
print(period_length(big))
