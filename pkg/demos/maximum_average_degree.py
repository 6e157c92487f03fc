"""
Maximum average degree, exactly
===============================

mad(G) is the largest 2|E(H)|/|V(H)| over subgraphs H. It is found here by
a parametric min-cut search over exact rationals, and it is checked against
the subset enumeration on a small graph. A graph of girth g that embeds in
the plane has mad below 2g/(g-2).
"""

from kforest import Graph, densest_subgraph, girth, girth_mad_bound, mad, mad_brute
from kforest.generators import complete, cycle, petersen, subdivision

# K4 with a pendant path: the K4 is the dense part.
g = Graph.from_edges(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                         (3, 4), (4, 5), (5, 6), (6, 7)])
res = densest_subgraph(g)
print("mad:", 2 * res.density, "witness:", res.witness)
print("brute force agrees:", mad_brute(g) == mad(g))

print("Petersen:", mad(petersen()))

# girth thresholds used by the coloring bounds
for gi in (12, 8, 6):
    print(f"girth {gi}: mad < {girth_mad_bound(gi)}")

# subdividing K4 raises its girth and pulls mad toward 2
for t in range(4):
    h = subdivision(complete(4), t)
    print(f"K4 subdivided {t}x: girth {girth(h)}, mad {mad(h)}, "
          f"planar bound {girth_mad_bound(girth(h))}")

print("cycles sit at mad 2:", {n: str(mad(cycle(n))) for n in (5, 9)})
