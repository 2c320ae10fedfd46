"""Numerical semigroups from scratch.

A numerical semigroup is what you get by closing a few coprime positive
integers under addition: finitely many nonnegative integers are missed
(the gaps), and the largest missed one is the Frobenius number.  The
library stores exactly the membership window up to the Frobenius number,
so everything here is exact.
"""

from nslab import enumerate_by_genus, semigroup_from_generators

S = semigroup_from_generators([3, 5, 7])

print("S = <3,5,7>")
print("members up to 12:", S.members_below(13))
print("gaps:", sorted(S.gap_set))
print("frobenius number:", S.frobenius)
print("multiplicity:", S.multiplicity, " genus:", S.genus)

# The Apery set with respect to a member n holds the smallest member in
# each residue class mod n; its maximum is always frobenius + n.
print("apery set for 3:", sorted(S.apery_set(3)))

# The invariant record adds the ring-theoretic shadows: pseudo-Frobenius
# numbers (the type), symmetry (Gorenstein) and almost symmetry.
inv = S.invariants()
print("pseudo-frobenius:", inv.pseudo_frobenius, " type:", inv.cm_type)
print("symmetric:", inv.symmetric, " almost symmetric:", inv.almost_symmetric)

# Generating sets need not be minimal; the library prunes them.
T = semigroup_from_generators([6, 10, 15, 21, 25])
print("\n<6,10,15,21,25> minimizes to:", T.minimal_generators)
print("frobenius:", T.frobenius)

# Enumeration by genus walks the semigroup tree.  The counts grow like a
# Fibonacci-flavored sequence; every semigroup appears exactly once.
print("\nsemigroups per genus:")
for g in range(9):
    level = enumerate_by_genus(g)
    heads = ", ".join(f"<{s}>" for s in level[:4])
    more = "" if len(level) <= 4 else f", ... ({len(level)} total)"
    print(f"  genus {g}: {len(level):3d}   {heads}{more}")
