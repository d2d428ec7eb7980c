"""
IO-polynomials of permutations and cycle types
==============================================

F_pi(z) sums z^floor((c(zeta pi) - 1) / 2) over all n-cycles zeta.
It only depends on the cycle type of pi.
"""

# %%
from cllc.perm import Permutation, Partition
from cllc.iopoly import io_polynomials, f_of_partition, f_from_g, reduce_partition, type_invariance_check
from cllc.stirling import f_cyclic_closed, f_cyclic_recurrence

pi = Permutation.parse("(1 2 3)(4 5)")
f, g = io_polynomials(pi)
print("F =", f)
print("G =", g)
print("F recovered from G:", f_from_g(g, pi.parity()) == f)

# %%
# Same cycle type, same polynomial.
rep = type_invariance_check(Partition([3, 2]), samples=4)
print(rep.ok, [str(p) for p in rep.samples])

# %%
# Fixed points only scale the polynomial.
red = reduce_partition(Partition([3, 2, 1, 1]))
print(red.core, red.units, red.multiplier)
print(f_of_partition([3, 2, 1, 1]) == f_of_partition([3, 2]).scale(red.multiplier))

# %%
# The n-cycle family three ways: closed form, recurrence, enumeration.
rec = f_cyclic_recurrence(9)
for n in range(1, 10):
    enum = f_of_partition([n])
    print(n, f_cyclic_closed(n), rec[n - 1] == enum == f_cyclic_closed(n))
