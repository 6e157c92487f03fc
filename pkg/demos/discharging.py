"""
Discharging without configurations
==================================

Each vertex starts with its degree as charge. High-degree vertices send
fixed amounts to their 2-neighbours. When a graph has none of the
reducible pieces, every final charge stays above the bound, so the
average degree, and hence mad, is at least that bound.
"""

from kforest import R1, R3, Graph, check_bound
from kforest.discharging import apply
from kforest.generators import complete, cycle, petersen, subdivision

# K4 with one edge subdivided: the new 2-vertex collects 2/5 from each end
g = Graph.from_edges(5, [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
state = apply(g, R1)
print("final charges under R1:", [str(x) for x in state.final])
print("total conserved:", sum(state.final) == 2 * g.m)

for name, h in [("C7", cycle(7)), ("Petersen", petersen()),
                ("subdivided K4", subdivision(complete(4), 1))]:
    for p in (1, 3):
        rep = check_bound(h, p, 4)
        print(f"{name}, p={p}:", rep.to_dict())

print("R3 on K4:", [str(x) for x in apply(complete(4), R3).final])
