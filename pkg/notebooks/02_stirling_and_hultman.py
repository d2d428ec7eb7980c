"""
Stirling numbers and Hultman numbers
====================================

H(n, k) counts (n+1)-cycles zeta with exactly k cycles in rho * zeta.
The closed form is checked against direct enumeration.
"""

# %%
from cllc.stirling import stirling_first, stirling_gf, hultman, hultman_brute_row

for n in range(1, 7):
    print(n, [stirling_first(n, k) for k in range(1, n + 1)])

print(stirling_gf(4))

# %%
for n in range(0, 7):
    closed = [hultman(n, k) for k in range(1, n + 2)]
    brute = list(hultman_brute_row(n)[1:n + 2])
    print(n, closed, "ok" if closed == brute else "MISMATCH")

# %%
# Every (n+1)-cycle lands somewhere, so each row sums to n!.
import math
print([sum(hultman_brute_row(n)) == math.factorial(n) for n in range(0, 8)])
