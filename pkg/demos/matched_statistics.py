"""
Cell-to-cell maps that preserve arm and leg
===========================================

Three multiset identities hold for every bounded partition:

1. hooks of the square region SQ = hooks of the rectangle R plus hooks of
   the diagram D,
2. the same with (arm, leg) pairs instead of hooks,
3. (arm, leg) pairs of the strip T = (arm, leg) pairs of its rotation Tstar.

Each identity is witnessed by an explicit bijection.  phi sends the strip
onto its rotation one arm-slice at a time, using the lattice-path pairing;
psi routes every cell of SQ to either the rectangle or the diagram.  The
package checks both maps cell by cell and wraps the outcome in a
certificate, alongside an independent brute-force multiset comparison.
"""

import json

from hookpair import phi_map, psi_map, Partition, theorem_report

alpha = Partition((3, 2, 0), k=3, n=3)
print(f"alpha = {alpha}, k = {alpha.k}, n = {alpha.n}")
print()

# The strip-to-rotation map.  Every entry records source cell, target cell,
# and the shared (arm, leg) pair.
print("phi: strip -> rotated strip")
for entry in phi_map(alpha).entries:
    a, l = entry.al
    print(f"  {entry.source} -> {entry.target}   arm={a} leg={l}")
print()

# The composed map.  V-cells go straight to the rectangle; strip cells pass
# through phi first and then land in the rectangle or the diagram depending
# on which half of the rotated strip they hit.
counts = {"R": 0, "D": 0}
for entry in psi_map(alpha).entries:
    counts[entry.target_tag] += 1
print(f"psi: square -> rectangle + diagram   ({counts['R']} cells to R, "
      f"{counts['D']} cells to D)")
print()

# Reports bundle the oracle comparison with the certificate.
for which in (1, 2, 3):
    report = theorem_report(alpha, which)
    oracle = report["oracle"]["equal"]
    cert = report["certificate"]["verdict"]
    print(f"identity {which}: oracle equal = {oracle}, certificate = {cert}, "
          f"verdict = {report['verdict']}")
print()

# The full report round-trips through JSON for archiving.
blob = json.dumps(theorem_report(alpha, 3), indent=2, sort_keys=True)
print("identity 3 report, serialized:")
print(blob)
