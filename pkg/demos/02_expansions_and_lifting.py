"""
Digit strings and the m_p exponent
==================================

The period of 1/p read as an integer is c_p = (10**l_p - 1) / p. How many
times p divides c_p (the exponent m_p) decides when raising p to higher powers
starts multiplying the period by p.
"""

from decperiod import c_digits, compute_m_p, digit_divisibility, expand, l_prime_power

for q, n in [(1, 7), (1, 27), (1, 42), (1, 125), (22, 7)]:
    print(f"{q}/{n} = {expand(q, n)}")

print("1/49 period:", expand(1, 49).period_digits)

# 3 divides c_3 = 3 once, so 1/9 still has period 1; 7 does not divide 142857,
# so 1/49 already has period 7 * 6.
for p in (3, 7, 11, 13, 487):
    print(f"p={p:>3}  c_p starts {c_digits(p)[:12]:<12}  m_p={compute_m_p(p)}")

# The step from p**k to p**(k+1) keeps the period exactly when p divides c_{p^k}.
for p in (3, 7):
    for k in range(1, 5):
        stays = digit_divisibility(expand(1, p**k).period_digits, p)
        print(f"p={p} k={k}: l={l_prime_power(p, k):>5} -> {l_prime_power(p, k + 1):>5}  p | c: {stays}")
