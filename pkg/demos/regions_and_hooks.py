"""
Regions of a bounded partition and their hook statistics
========================================================

A partition with k parts, each at most n, carves several cell regions out of
the plane.  Rows are numbered from the bottom, so row 1 is the lowest row and
"leg" counts cells below a given cell.  This script builds every region for
one sample partition and prints the basic statistics.
"""

from collections import Counter

from hookpair import (
    al_multiset,
    build_region,
    conjugate,
    hook_multiset,
    Partition,
    render_ascii,
)

alpha = Partition((6, 5, 3, 1), k=4, n=6)
print(f"partition alpha = {alpha}, k = {alpha.k}, n = {alpha.n}")
print(f"conjugate       = {conjugate(alpha)}")
print()

# D is the Young diagram of alpha itself (left-justified, short rows at the
# bottom).  R is the full k-by-n rectangle.  T is a skew strip whose bottom
# row is the largest part; SQ extends T by a staircase V hanging on the right.
# Tstar is the half-turn rotation of T, and R1/R2, T1star/T2star cut the
# rectangle and the rotated strip into complementary pieces.
for kind in ("D", "R", "T", "V", "SQ", "Tstar", "R1", "R2", "T1star", "T2star"):
    g = build_region(alpha, kind)
    print(f"{kind}: {len(g)} cells")
    if len(g):
        print(render_ascii(g))
    print()

# Arm, leg, and hook of a single cell, measured inside D.
d = build_region(alpha, "D")
cell = (2, 2)
print(f"cell {cell} in D: arm={d.arm(cell)} leg={d.leg(cell)} hook={d.hook(cell)}")
print()

# The hook multiset of the rectangle always contains the hook multiset of the
# diagram union what the strip contributes; here we just print both multisets.
print("hook multiset of D :", dict(sorted(hook_multiset(d, d).items())))
print("hook multiset of R :", dict(sorted(hook_multiset(build_region(alpha, 'R'),
                                                        build_region(alpha, 'R')).items())))

# (arm, leg) pairs can be collected over any subset of cells; the multiset for
# the bottom row of D, for example:
bottom = [(1, c) for c in d.row_cols(1)]
pairs: Counter = al_multiset(d, bottom)
print("AL pairs of D's bottom row:", sorted(pairs.elements()))
