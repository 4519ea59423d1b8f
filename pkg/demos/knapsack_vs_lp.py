"""
Knapsack, brute force and the LP relaxation
===========================================

max sum f_K(c_j) over compositions of n-1 into n parts is an unbounded
knapsack with items of weight b_i* and value i.  The LP relaxation puts all
capacity on the item with the best ratio i/b_i*, and the two agree whenever
that item's weight divides the capacity.
"""

from tunnelgr import defect_profile, lookup, lp_relaxation, max_defect_sum_bruteforce, max_defect_sum_knapsack

K = lookup("illustration-5-7-23")

print("cap  brute  knapsack  counts     lp")
for cap in range(0, 15):
    brute, _ = max_defect_sum_bruteforce([defect_profile(K, cap)] * (cap + 1), cap)
    dp = max_defect_sum_knapsack(K, cap)
    lp = lp_relaxation(K, cap)
    print(f"{cap:3d}  {brute:5d}  {dp.value:8d}  {str(dp.counts):9s}  {lp.value}")

lp = lp_relaxation(K, 1)
print("best ratio at i0 =", lp.pivot_index, "argmax =", sorted(lp.argmax))
