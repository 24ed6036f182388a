"""
Exact thresholds at small order
===============================

``max_pcfree_delta`` enumerates every coloring of every vertex pair and
returns the largest minimum monochromatic degree among instances without a
properly colored cycle.  One more than that is the threshold d(n, c).
"""

import pccycles as pc

for n in range(2, 6):
    rep = pc.max_pcfree_delta(n, 2)
    print(f"undirected n={n} c=2: max delta {rep.max_delta}, d={rep.d_exact}, "
          f"examined {rep.examined}")

rep = pc.max_pcfree_delta(5, 2)
print("witness at n=5 equals G(1,1):", rep.witness == pc.build((1, 1)))

for n in range(2, 5):
    rep = pc.max_pcfree_delta(n, 2, directed=True)
    print(f"directed n={n} c=2: max delta {rep.max_delta}, d={rep.d_exact}")
    print(pc.serialize(rep.witness))

# Lower bound from the construction order, for comparison
for n in (5, 19, 69, 271):
    print(f"n={n}: lower bound on d(n,2) = {pc.lower_bound_d(n, 2):.3f}")
