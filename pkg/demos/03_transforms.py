"""
Doubling and color merging
==========================

Doubling turns each edge into two opposite arcs of the same color and keeps
properly colored cycles in both directions.  Merging collapses colors
``1..floor(c/2)`` into 1 and the rest into 2; cycles survive only forwards.
"""

import pccycles as pc

G = pc.build((1, 1, 1))
D = pc.double(G)
print("G(1,1,1) doubled:", D.n, "vertices,", D.m, "arcs; PC cycle:",
      pc.find_pc_cycle_directed(D, max_n=16).has_pc_cycle)

n, c = 5, 4
arcs = [(v, (v + k) % n, k) for v in range(n) for k in range(1, c + 1)]
D4 = pc.ColoredDigraph(n, c, tuple(arcs))
M = pc.merge_colors(D4)
print("min out-degree per color before/after merge:", pc.delta_out_mon(D4), pc.delta_out_mon(M))
cyc = pc.find_pc_cycle_directed(M).cycle
print("a PC cycle after merging:", cyc.format(), "-> still PC before:", pc.is_pc_cycle(D4, cyc.vertices))

# The converse fails: antiparallel arcs colored 1 and 2 merge to one color.
pair = pc.ColoredDigraph(2, 4, ((0, 1, 1), (1, 0, 2)))
print("before:", pc.find_pc_cycle_directed(pair).has_pc_cycle,
      "after:", pc.find_pc_cycle_directed(pc.merge_colors(pair)).has_pc_cycle)
