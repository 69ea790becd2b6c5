"""Exhaustive scan of SO_5(F_3): lines, the twisted class, the trace identity.

Run:  python demos/orthogonal_group_scan.py
"""

import numpy as np

from weylchars.so5 import OrthogonalGeometry

geo = OrthogonalGeometry(q=3)

print("=== the line geometry ===")
iso, plus, minus = geo.line_census()
print(f"  lines in F_3^5: {iso + plus + minus}")
print(f"  isotropic: {iso}   square-norm: {plus}   non-square-norm: {minus}")
print(f"  4-space perpendicular to a square-norm line is split:"
      f" {geo.perp_is_split([1, 0, 0, 0, 0])}")

print("\n=== the group ===")
elements = geo.enumerate_group()
print(f"  elements enumerated: {len(elements)} (= 3^4 * (3^2-1) * (3^4-1))")

print("\n=== the twisted class ===")
print("Membership: rank(g-1)=4, rank(g+1)=3, rank((g+1)^2)=2, i.e. the")
print("semisimple part negates a hyperplane and the unipotent part has")
print("Jordan blocks 3,1,1.  Labels: eps = type of the fixed line,")
print("delta = shared type of the non-degenerate (-1)-lines.\n")
by_label = {}
member = None
for g in elements:
    label = geo.in_class_c(g)
    if label is not None:
        by_label.setdefault((label.eps, label.delta), 0)
        by_label[(label.eps, label.delta)] += 1
        if member is None:
            member = g
for label in sorted(by_label):
    print(f"  label (eps={label[0]:+d}, delta={label[1]:+d}): {by_label[label]} elements")
print(f"  total: {sum(by_label.values())} members")

print("\n=== the trace identity on one member ===")
print(np.array2string(member, prefix="  "))
label = geo.in_class_c(member)
print(f"  label: eps={label.eps:+d} delta={label.delta:+d}")
print(f"  class-function value 2*delta*q : {geo.class_support_value(member):+d}")
print(f"  line-count trace               : {geo.line_count_trace(member):+d}")
print(f"  coset-model virtual character  : {geo.induced_virtual_trace(member):+d}")

print("\n=== the full verification ===")
record = geo.verify(seed=0)
print(f"  status: {record.status} ({record.elapsed_ms} ms)")
for c in record.counterexamples[:5]:
    print(f"  counterexample: {c}")
