"""
Checking a forested coloring by hand
====================================

A k-forested coloring is proper, no vertex sees any color k or more
times, and no two color classes span a cycle. Here we check a few
colorings of small graphs and compare exact values with the general
lower bound ceil(Delta/(k-1)) + 1.
"""

from kforest import kf_chromatic, lower_bound, verify
from kforest.generators import cycle, star

# The star K_{1,6}: the center gets color 3, the leaves split 3 + 3.
g = star(6)
print("star witness:", verify(g, [3, 1, 1, 1, 2, 2, 2], 4).to_dict())

# With k=3 the same coloring puts three leaves of one color on the center.
print("star, k=3:", verify(g, [3, 1, 1, 1, 2, 2, 2], 3).to_dict())

# Two colors around an even cycle always close a bicolored cycle.
print("C4 in two colors:", verify(cycle(4), [1, 2, 1, 2], 3).to_dict())

# Exact values against the lower bound
for name, h, k in [("K_{1,6}", star(6), 4), ("C5", cycle(5), 4), ("C6", cycle(6), 3)]:
    t, witness = kf_chromatic(h, k)
    print(f"{name}, k={k}: chromatic {t}, lower bound {lower_bound(h.max_degree(), k)}, "
          f"witness {witness}")
