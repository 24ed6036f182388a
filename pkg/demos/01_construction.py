"""
Building edge-colored graphs with no properly colored cycle
===========================================================

``build(p)`` grows a graph from a parameter vector: a root joined in color i
to every vertex of the graph built from ``p`` with coordinate i lowered by
one.  The minimum monochromatic degree equals ``min(p)`` while no properly
colored cycle ever appears.
"""

import numpy as np

import pccycles as pc

G = pc.build((1, 1))
print(G.n, "vertices:", G.edges)
print("degree table (rows = vertices, columns = colors 1..c):")
print(pc.degree_table(G))

# The order grows exponentially in the coordinate sum s.
for c in (2, 3):
    for q in range(1, 5):
        p = (q,) * c
        n = pc.order_of(p)
        print(f"c={c} p={p}: order {n:>8}  edges {pc.edge_count_of(p):>9}  "
              f"s*c^s = {pc.lemma_order_bound(q * c, c)}")

# The same value of delta_mon on larger graphs: replace the single-vertex
# base by an edgeless graph on b vertices.
for b in (1, 2, 5):
    H = pc.build((2, 1), b)
    print(f"b={b}: n={H.n}, delta_mon={pc.delta_mon(H)}, "
          f"PC cycle: {pc.decide_pc_undirected(H).has_pc_cycle}")

# With three colors the bound s*2^s no longer covers the order.
n333 = pc.order_of((3, 3, 3))
print("order of G(3,3,3) =", n333, "vs 9*2^9 =", pc.literal_lemma_bound(9))

# Orders as a numpy array for the two-color diagonal
orders = np.array([pc.order_of((q, q)) for q in range(1, 9)], dtype=float)
print("log2 of orders:", np.round(np.log2(orders), 3))
