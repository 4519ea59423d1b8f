"""
Growth rate and convergence of S_n
==================================

S_n = (g(E(nK)) - n g(E(K)) + n - 1)/(n - 1) tends to min_i (1 - i/b_i*)
for an m-small knot, and is pinned between two explicit rational bounds
at every finite n.
"""

from tunnelgr import convergence_report, growth_rate_closed_form, lookup

for name in ("unknot", "2bridge", "torus-3-4", "KMSY", "illustration-5-7-23"):
    rate, argmin = growth_rate_closed_form(lookup(name))
    print(f"{name:20s} gr = {rate}  argmin = {sorted(argmin)}")

rep = convergence_report(lookup("KMSY"), 25)
print()
print(" n   lower    S_n   upper")
for (n, s), (_, lo, up) in zip(rep.s_table, rep.bounds_table):
    print(f"{n:2d}  {str(lo):>6s} {str(s):>6s} {str(up):>6s}")

print("S_n hits the limit at n =", rep.divisible_hits)
for check, ok in rep.checks.items():
    print(f"{'ok ' if ok else 'BAD'} {check}")
