"""
Genus of connected sums
=======================

Cutting E(K_1 # ... # K_n)^(c) along n-1 swallow-follow tori leaves the
drilled exteriors E(K_i)^(c_i) with sum c_i = c + n - 1.  For m-small
factors the genus of the sum is the best such decomposition.
"""

from tunnelgr import amalgamated_genus, connected_sum_drilled_genus, drilled_genus, lookup
from tunnelgr.genus import composition_genus
from tunnelgr.optimize import compositions

KMSY = lookup("KMSY")
K = lookup("2bridge")

# drilling once raises the genus of E(KMSY) but not of a 2-bridge exterior
print("g(E(KMSY)^(1)) =", drilled_genus(KMSY, 1).value)
print("g(E(K)^(1))    =", drilled_genus(K, 1).value)

# the two ways of placing the single swallow-follow torus
for parts in compositions(1, 2):
    print(parts, "->", composition_genus([KMSY, K], parts))

bound, witness = connected_sum_drilled_genus([KMSY, K])
print("g(E(KMSY # K)) =", bound.value, "attained at c =", witness.counts)

# the same numbers by hand: amalgamate along one torus
print(amalgamated_genus(2, 2, [1]), amalgamated_genus(3, 2, [1]))

print("g(E(2 KMSY)) =", connected_sum_drilled_genus([KMSY, KMSY])[0].value)
