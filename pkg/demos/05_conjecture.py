"""
The long-cycle conjecture fails
===============================

The conjecture asks for a properly colored cycle of length at least
min{n, cd} (min{n, cd + 1} for c > 2) whenever the minimum monochromatic
degree d is at least 1.  Every graph of the recursive family has none.
"""

import pccycles as pc

for p in [(1, 1), (2, 2), (1, 1, 1), (2, 2, 2), (3, 3)]:
    rep = pc.conjecture_report(pc.build(p))
    print(f"G{p}: n={rep.n} d={rep.d} claimed length >= {rep.claimed}, "
          f"observed {rep.observed or 'none'} -> {rep.verdict}")

# Bounds on the thresholds, with the unspecified constants set to 0
for n in (2**8, 2**16, 2**32):
    lo, hi = pc.gsy_bounds(n)
    print(f"n=2^{n.bit_length() - 1}: construction lower {pc.lower_bound_d(n, 2):.3f}, "
          f"older lower {lo:.3f}, upper {hi:.3f}, c=4 upper {pc.merged_upper_bound(n, 4):.3f}")
