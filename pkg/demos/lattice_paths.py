"""
Lattice paths from a skew strip
===============================

Fix a cut index i.  In each row of the strip T that is long enough, mark the
cell whose arm length is i-1 (an "x" label); in each row of T, mark the
rightmost cell (a "z" label, numbered from the top row down).  Reading all
labels by column, left to right, gives a word that always encodes a Dyck
path: x's are up steps and z's are down steps.

Matching every up step with the first later down step one level higher pairs
the x's with the z's.  The height at which each step starts is itself a cell
statistic: legs for up steps, colegs (plus one) for down steps.
"""

from hookpair import (
    arm_prefix,
    build_dyck,
    build_region,
    build_sigma,
    pair_updown,
    pairing_tuple,
    Partition,
)

alpha = Partition((11, 11, 9, 8, 8, 6, 3, 1, 0), k=9, n=11)
i = 3

sigma = build_sigma(alpha, i)
path = build_dyck(sigma)
pairing = pair_updown(path)

print(f"alpha = {alpha}, cut i = {i}")
print()
print(f"label word sigma_{i}:")
print(f"  {sigma}")
print()
print("as a lattice path (U = up, D = down):")
for line in path.render_text().splitlines():
    print(f"  {line}")
print(f"  maximum height reached: {path.max_height()}")
print()

values = ", ".join(str(pairing[j]) for j in sorted(pairing))
print(f"pairing P_{i} = ({values})")
print(f"as a tuple: {pairing_tuple(pairing)}")
print()

# Step heights are not arbitrary: an up step labelled x_j starts at the leg
# of its cell in T, and a down step labelled z_j starts one above the coleg
# of its cell in the sub-strip of rows with at least i cells.
strip = build_region(alpha, "T")
prefix = arm_prefix(strip, i)
print("step  label  height  matching statistic")
for t, (direction, lab) in enumerate(path.steps, start=1):
    h = path.step_height(t)
    if direction == 1:
        stat = f"leg_T{lab.cell} = {strip.leg(lab.cell)}"
    else:
        stat = f"coleg{lab.cell}+1 = {prefix.coleg(lab.cell) + 1}"
    print(f"{t:4d}  {str(lab):5s}  {h:6d}  {stat}")
