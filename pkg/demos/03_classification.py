"""Classifying monomial curve rings: Gorenstein flavors and reduction
numbers.

The classification record bundles the Gorenstein / almost / nearly /
far-flung flags with the canonical reduction number (how fast the powers
of the canonical ideal stabilize) and the conductor.  A few standard
families make the hierarchy visible.
"""

from nslab import blowup, b_ideal, canonical_ideal, classify, enumerate_by_genus, semigroup_from_generators

families = [
    [2, 3],        # the cusp: Gorenstein
    [3, 4, 5],     # far-flung almost Gorenstein (one-step normal)
    [3, 5, 7],     # almost Gorenstein, not far-flung
    [4, 5, 6, 7],  # maximal embedding dimension
    [5, 6, 7],     # neither almost nor nearly
    [4, 7, 9, 10], # MED but not almost symmetric
]

print(f"{'S':14s} {'gor':>4s} {'almost':>7s} {'nearly':>7s} {'far':>4s} "
      f"{'can.red':>8s} {'med':>4s}  conductor")
for gens in families:
    s = semigroup_from_generators(gens)
    rec = classify(s)
    print(
        f"<{str(s):12s}> {str(rec.gorenstein):>4s} {str(rec.almost_gorenstein):>7s} "
        f"{str(rec.nearly_gorenstein):>7s} {str(rec.far_flung_gorenstein):>4s} "
        f"{rec.canonical_reduction_number:>8d} {str(rec.med):>4s}  {rec.conductor}"
    )

# Blowing up the canonical ideal: iterate colons of powers until they
# stabilize.  For <3,5,7> the result is the semigroup generated by the
# normalized canonical class.
s = semigroup_from_generators([3, 5, 7])
k = canonical_ideal(s)
print("\nblowup of K over <3,5,7>:", blowup(k))
print("b(K) = S - B(K)         :", b_ideal(k))

# How common is each flavor at small genus?
print("\ncounts per genus (gorenstein / almost / nearly / all):")
for g in range(9):
    level = enumerate_by_genus(g)
    recs = [classify(s) for s in level]
    print(
        f"  genus {g}: "
        f"{sum(r.gorenstein for r in recs):3d} / "
        f"{sum(r.almost_gorenstein for r in recs):3d} / "
        f"{sum(r.nearly_gorenstein for r in recs):3d} / {len(level):3d}"
    )
