"""
The defect function f_K
=======================

f_K(c) = g(E(K)) + c - g(E(K)^(c)) measures how far drilling c meridional
curves falls short of adding c to the genus.  For an m-small knot it is a
staircase that steps up by one at each bridge index b_i*.
"""

from tunnelgr import defect_profile, drilled_genus, lookup

# a hypothetical m-small knot in S^3 with b* = (5, 7, 23)
K = lookup("illustration-5-7-23")
profile = defect_profile(K, 25)

print("c   f_K(c)  g(E(K)^(c))")
for c, f in enumerate(profile.values):
    print(f"{c:2d}  {f:6d}  {drilled_genus(K, c).value:11d}")

# the staircase steps exactly at the bridge indices
print("thresholds:", profile.thresholds)

# past the last bridge index the drilled exterior has genus exactly c
print("g(E(K)^(30)) =", drilled_genus(K, 30).value)
