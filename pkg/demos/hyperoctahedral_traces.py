"""Bi-symbols and signed cycle types: characters of signed permutations.

Run:  python demos/hyperoctahedral_traces.py
"""

from weylchars import (
    BiSymbol,
    SignedCycleType,
    character_table_wn,
    chi_value,
    mn_trace_wn,
    oracle_trace_wn,
    signed_cycle_types,
)

print("=== signed cycle types of W_2 ===")
print("A class of the signed permutation group is a pair of multisets:")
print("positive cycle lengths and negative (sign-flipping) cycle lengths.\n")
for cls in signed_cycle_types(2):
    print(f"  pos={cls.pos!s:8} neg={cls.neg!s:8} flip character: {chi_value(cls):+d}")

print("\n=== two one-dimensional characters ===")
trivial = BiSymbol((2,), ())
flips = BiSymbol((), (2,))
for cls in signed_cycle_types(2):
    print(
        f"  class (pos={cls.pos}, neg={cls.neg}): trivial -> "
        f"{mn_trace_wn(trivial, cls):+d}, flip-counting -> {mn_trace_wn(flips, cls):+d}"
    )

print("\n=== recursion against the group-theoretic oracle ===")
print("The oracle builds all 2^n n! signed permutations, conjugates a class")
print("representative over the whole group, and sums the block-subgroup")
print("class function.  The cycle-removal recursion must agree.\n")
sym = BiSymbol((0, 1), (2,))  # an irreducible of W_2
for cls in signed_cycle_types(2):
    a = mn_trace_wn(sym, cls)
    b = oracle_trace_wn(sym, cls)
    marker = "ok" if a == b else "MISMATCH"
    print(f"  pos={cls.pos!s:8} neg={cls.neg!s:8} recursion {a:+d} oracle {b:+d} [{marker}]")

print("\n=== the W_2 character table ===")
table = character_table_wn(2)
head = " ".join(f"p{c.pos}n{c.neg}".rjust(14) for c in table.col_labels)
print("  " + head)
for label, row in zip(table.row_labels, table.entries):
    cells = " ".join(str(v).rjust(14) for v in row)
    print(f"  {cells}   <- {label.top};{label.bottom}")
print(f"\n  weighted row orthogonality: {table.is_orthogonal()}")
print(f"  centralizer orders: {table.centralizers}")
