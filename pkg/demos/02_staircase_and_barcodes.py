"""
Staircases and the filtered reduction
=====================================

Build the staircase of the trefoil and of T(6, 7; 2, 1), then split it
at a fixed t into one surviving generator and a set of arrows.
"""

from fractions import Fraction

from upsilon_torsion import (
    barcode_at,
    barcode_by_ranks,
    expected_gap_pattern,
    filtration_line,
    max_finite_bar,
    staircase_from_gaps,
)

trefoil = staircase_from_gaps([1, 1])
for g in trefoil.generators:
    print(f"generator {g.index} at ({g.x}, {g.y}), grading {g.grading}, FL = {filtration_line(g)}")

t = Fraction(1, 2)
b = barcode_at(trefoil, t)
print("survivor:", b.survivor.birth_gen, "bars:", [(str(x.birth), str(x.death)) for x in b.finite_bars])

# The rank-counting oracle recovers the same bars without any basis change.
print("oracle agrees:", b.multiset() == barcode_by_ranks(trefoil, t).multiset())

# At t = 1 the longest arrow of T(6, 7; 2, 1) has length 2.
c = staircase_from_gaps(expected_gap_pattern(6, 1))
print("generators:", len(c.generators), "genus:", c.genus)
print("longest bar at t=1:", max_finite_bar(barcode_at(c, 1)))
