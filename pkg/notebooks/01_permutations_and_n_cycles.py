"""
Permutations, cycle types and the n-cycles
==========================================

Products are read left to right: ``a * b`` applies ``a`` first.
"""

# %%
from cllc.perm import Permutation, Partition, n_cycle_array, batch_cycle_counts, partitions

a = Permutation.parse("(1 2 3)(4 5)")
b = Permutation.parse("[2,1,3,4,5]")
print(a, "*", b, "=", a * b)
print("cycle type", a.cycle_type(), " parity", a.parity())

# %%
# The n-cycles come out of numpy as one row per cycle, in one-line form.
rows = n_cycle_array(5)
print(rows.shape)  # (4!, 5)
print(rows[:3] + 1)

# %%
# Cycle counts for a whole block of permutations at once.
counts = batch_cycle_counts(rows)
print(set(counts.tolist()))  # every row is a single cycle

# %%
# Partitions in reverse-lexicographic order, and fixed-point stripping.
for lam in partitions(5):
    core, k = lam.unit_reduction()
    print(f"{str(lam):10s} {lam.exponent_form():10s} core {core} units {k}")

lam = Partition.parse("4,2,2")
print(lam.n, lam.exponent_form())
