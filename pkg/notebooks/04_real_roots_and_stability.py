"""
Exact real-rootedness and the even/odd interlacing test
=======================================================

Sturm chains count real roots; bisection with rationals isolates them.
A polynomial with nonnegative coefficients whose even and odd parts have
real nonpositive interlacing roots is stable.
"""

# %%
from cllc.polynomial import parse
from cllc.analysis import certify_real_rooted, hermite_biehler_check, is_log_concave, consecutive_interlacing
from cllc.stirling import stirling_gf, f_cyclic_closed

p = parse("8 + 15*z + z^2")
cert = certify_real_rooted(p)
print(cert.real_rooted, [(str(iv.lo), str(iv.hi)) for iv in cert.isolating_intervals])
print(is_log_concave(p))

# %%
print(certify_real_rooted(parse("z^2 - z + 1")).real_rooted)

# %%
# Rising factorials have roots 0, -1, ..., -(n-1); split them into parts.
for n in range(3, 9):
    rep = hermite_biehler_check(stirling_gf(n))
    print(n, rep.ok, "even:", rep.even, " odd:", rep.odd)

# %%
# Consecutive F_n interlace, with the direction alternating in n.
for n in range(2, 12):
    a, b = f_cyclic_closed(n), f_cyclic_closed(n + 1)
    print(n, consecutive_interlacing(a, b, strict=True))
