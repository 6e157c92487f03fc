"""
Coloring from lists by peeling configurations
=============================================

A sparse graph always contains one of five small reducible pieces. The
colorer removes them one after another, then puts the vertices back in
reverse order, each time picking the least color of the list outside a
forbidden set. The trace records every choice.
"""

import random

from kforest import color, find_configuration, mad, params, verify
from kforest.generators import complete, subdivision

# 25 vertices and 30 edges, so mad = 12/5: fine for p=2, which needs mad < 8/3
g = subdivision(complete(5), 2)
k, p = 4, 2
M = max(g.max_degree(), k)
prm = params(M, k, p)
print(f"mad = {mad(g)}, Delta = {g.max_degree()}, lists of size q = {prm.q}")

# the first configuration the peel will use
print("first configuration:", find_configuration(g, p, k).to_dict())

rng = random.Random(0)
lists = [set(rng.sample(range(1, 10), prm.q)) for _ in range(g.n)]
c, trace = color(g, lists, k, p, M, debug=True)

print("valid:", verify(g, c, k).valid, "fallbacks:", len(trace.fallbacks))
print("peel kinds:", [cfg.kind for cfg in trace.configurations][:10], "...")
for step in trace.steps[:5]:
    print(f"  {step.kind}: vertex {step.vertex} avoids {sorted(step.forbidden)} -> {step.color}")
