"""Fractional ideals: the rank-one module theory of a monomial curve.

A relative ideal over S is a set of integers closed under adding S.  Up to
isomorphism (= translation) these are the rank-one maximal Cohen-Macaulay
modules.  The calculus below is all exact: sums are sumsets, colons are
set differences in the semigroup sense, and every ideal carries a finite
window plus a provable tail.
"""

from nslab import (
    canonical_dual,
    canonical_ideal,
    enumerate_ideal_classes,
    ideal_from_generators,
    is_reflexive,
    minimal_generators,
    normalization_ideal,
    ring_dual,
    semigroup_from_generators,
    syzygy_two_generated,
    trace_ideal,
    unit_ideal,
)

S = semigroup_from_generators([3, 5, 7])
R = unit_ideal(S)            # the ring itself
N = normalization_ideal(S)   # all of the nonnegative integers
K = canonical_ideal(S)       # the canonical ideal {x : F - x not in S}

print("R =", R)
print("N =", N)
print("K =", K, " generators:", minimal_generators(K))

# Operator sugar: + is the sumset, - is the colon {z : z + B in A}.
print("\nK + K      =", K + K)
print("S - N      =", R - N, "      (the conductor)")
print("S - K      =", ring_dual(K), "  (the ring dual of K)")
print("tr(K)      =", trace_ideal(K), "  (= the maximal ideal: nearly Gorenstein)")
print("D(N)=K-N   =", canonical_dual(N))

# The canonical dual is a duality: applying it twice returns the class.
print("\nD(D(K)) ==", canonical_dual(canonical_dual(K)), " vs K =", K)

# Reflexivity (being a syzygy) is decidable by the double ring dual.  The
# canonical class is reflexive only in the Gorenstein case, and <3,5,7>
# is not Gorenstein:
print("K reflexive?", is_reflexive(K))
print("N reflexive?", is_reflexive(N))

# Every 2-generated ideal has an explicit rank-one syzygy.
omega = syzygy_two_generated(K)
print("\nsyzygy of K:", omega)

# All ideal classes: subsets of the gaps adjoined to S, kept when still
# closed under the semigroup action.
classes = enumerate_ideal_classes(S)
print(f"\n{len(classes)} ideal classes of <{S}>:")
for cls in classes:
    flags = []
    if is_reflexive(cls):
        flags.append("reflexive")
    if len(minimal_generators(cls)) == 2:
        flags.append("2-generated")
    print(f"  {str(cls):18s} {' '.join(flags)}")

# A custom ideal from generators: the union of translates of S.
E = ideal_from_generators(S, {-2, 1})
print("\nideal generated by {-2, 1}:", E)
