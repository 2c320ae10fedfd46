"""Per-semigroup verification suites.

Each suite owns one family of checks, so a failure is attributable to a
single statement.  A suite is a function taking a :class:`SemigroupContext`
(cached per-semigroup data) and a :class:`Recorder`; it records violations,
informational findings and the number of checks executed.  The registry
order is fixed and the iteration inside every suite is deterministic, so
reports are reproducible byte for byte.

Informational findings are reserved for directions the underlying theory
only predicts over infinite residue fields (the MED converse); they never
fail a run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import annihilators as ann_mod
from .semigroups import NumericalSemigroup, enumerate_by_genus
from .ideals import (
    RelativeIdeal,
    canonical_dual,
    canonical_ideal,
    difference,
    enumerate_ideal_classes,
    format_ideal,
    intersect,
    is_reflexive,
    is_subset,
    is_translate,
    maximal_ideal,
    minimal_generators,
    n_fold_sum,
    normalization_ideal,
    normalize,
    ring_dual,
    sum as ideal_sum,
    trace_ideal,
    translate,
    unit_ideal,
    _syzygy_raw,
)
from .rings import blowup, canonical_reduction_number, classify, conductor_ideal, is_ulrich


@dataclass(frozen=True)
class Witness:
    """A replayable record of one failed or informational check."""

    semigroup: str
    ideals: tuple[str, ...]
    check: str
    details: str

    def to_json_dict(self) -> dict:
        return {
            "semigroup": self.semigroup,
            "ideals": list(self.ideals),
            "check": self.check,
            "details": self.details,
        }


@dataclass
class Recorder:
    semigroup: str
    violations: list[Witness] = field(default_factory=list)
    informational: list[Witness] = field(default_factory=list)
    checks: int = 0

    def check(self, ok: bool, check_id: str, ideals=(), details="") -> bool:
        """Record one check.  ``details`` may be a callable so that failure
        messages cost nothing on the passing path."""
        self.checks += 1
        if not ok:
            if callable(details):
                details = details()
            self.violations.append(
                Witness(
                    semigroup=self.semigroup,
                    ideals=tuple(format_ideal(e) for e in ideals),
                    check=check_id,
                    details=details,
                )
            )
        return ok

    def info(self, check_id: str, ideals=(), details="") -> None:
        self.checks += 1
        if callable(details):
            details = details()
        self.informational.append(
            Witness(
                semigroup=self.semigroup,
                ideals=tuple(format_ideal(e) for e in ideals),
                check=check_id,
                details=details,
            )
        )


class SemigroupContext:
    """Caches the per-semigroup objects the suites keep asking for."""

    def __init__(self, s: NumericalSemigroup):
        self.s = s
        self.inv = s.invariants()
        self.unit = unit_ideal(s)
        self.nat = normalization_ideal(s)
        self.mset = maximal_ideal(s)
        self.k = canonical_ideal(s)
        self.conductor = conductor_ideal(s)
        self.classes = tuple(enumerate_ideal_classes(s))
        self._trace: dict = {}
        self._ring_dual: dict = {}
        self._can_dual: dict = {}
        self._reflexive: dict = {}
        self._stable_ann: dict = {}
        self._blowup: dict = {}
        self._mingens: dict = {}
        self._canred: int | None = None
        self._classification = None
        self._category_ann = None

    # small keyed caches; ideals are hashable

    def trace(self, e: RelativeIdeal) -> RelativeIdeal:
        r = self._trace.get(e)
        if r is None:
            r = self._trace[e] = trace_ideal(e)
        return r

    def ring_dual(self, e: RelativeIdeal) -> RelativeIdeal:
        r = self._ring_dual.get(e)
        if r is None:
            r = self._ring_dual[e] = ring_dual(e)
        return r

    def can_dual(self, e: RelativeIdeal) -> RelativeIdeal:
        r = self._can_dual.get(e)
        if r is None:
            r = self._can_dual[e] = canonical_dual(e)
        return r

    def reflexive(self, e: RelativeIdeal) -> bool:
        r = self._reflexive.get(e)
        if r is None:
            r = self._reflexive[e] = is_reflexive(e)
        return r

    def stable_ann(self, e: RelativeIdeal) -> RelativeIdeal:
        key = normalize(e)[0]  # translation invariant
        r = self._stable_ann.get(key)
        if r is None:
            r = self._stable_ann[key] = ann_mod.stable_annihilator(key)
        return r

    def blowup_of(self, e: RelativeIdeal) -> RelativeIdeal:
        r = self._blowup.get(e)
        if r is None:
            r = self._blowup[e] = blowup(e)
        return r

    def mingens(self, e: RelativeIdeal) -> tuple[int, ...]:
        r = self._mingens.get(e)
        if r is None:
            r = self._mingens[e] = minimal_generators(e)
        return r

    @property
    def canred(self) -> int:
        if self._canred is None:
            self._canred = canonical_reduction_number(self.s)
        return self._canred

    @property
    def classification(self):
        if self._classification is None:
            self._classification = classify(self.s)
        return self._classification

    @property
    def category_ann(self) -> RelativeIdeal:
        if self._category_ann is None:
            acc = self.unit
            for cls in self.classes:
                acc = intersect(acc, self.stable_ann(cls))
            self._category_ann = acc
        return self._category_ann

    def two_generated(self) -> list[RelativeIdeal]:
        return [e for e in self.classes if len(self.mingens(e)) == 2]


def _sides(*pairs) -> str:
    return "; ".join(f"{name}={format_ideal(e)}" for name, e in pairs)


# --------------------------------------------------------------------------
# semigroup-level facts


@lru_cache(maxsize=32)
def _brute_force_gap_sets(genus: int) -> frozenset[frozenset[int]]:
    """Independent enumeration oracle: all valid gap sets of the given size,
    found by filtering subsets of {1..2g}."""
    if genus == 0:
        return frozenset([frozenset()])
    out = []
    universe = range(1, 2 * genus + 1)
    for combo in combinations(universe, genus):
        gaps = set(combo)
        top = max(gaps)
        ok = True
        for a in range(1, top):
            if a in gaps:
                continue
            for b in range(a, top - a + 1):
                if b not in gaps and (a + b) in gaps:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(frozenset(gaps))
    return frozenset(out)


@lru_cache(maxsize=32)
def _tree_gap_sets(genus: int) -> frozenset[frozenset[int]]:
    return frozenset(s.gap_set for s in enumerate_by_genus(genus))


def suite_semigroup_facts(ctx: SemigroupContext, rec: Recorder) -> None:
    """Additive closure, the brute-force enumeration oracle, the symmetry
    reflection and the Apery set shape."""
    s = ctx.s
    bound = 2 * s.frobenius + 2
    members = s.members_below(bound + 1)
    bad = None
    for a in members:
        for b in members:
            if not s.contains(a + b):
                bad = (a, b)
                break
        if bad:
            break
    rec.check(
        bad is None,
        "semigroupFacts:additive-closure",
        details="" if bad is None else f"{bad[0]} + {bad[1]} not a member",
    )

    if s.genus <= 6:
        brute = _brute_force_gap_sets(s.genus)
        rec.check(
            s.gap_set in brute,
            "semigroupFacts:gapset-in-bruteforce",
            details=f"gap set {sorted(s.gap_set)} missing from the oracle list",
        )
        rec.check(
            _tree_gap_sets(s.genus) == brute,
            "semigroupFacts:tree-matches-bruteforce",
            details=f"tree and brute-force enumerations differ at genus {s.genus}",
        )

    reflected = all(
        s.contains(z) != s.contains(s.frobenius - z)
        for z in range(-1, s.frobenius + 2)
    )
    rec.check(
        ctx.inv.symmetric == reflected,
        "semigroupFacts:symmetry-reflection",
        details=f"symmetric flag {ctx.inv.symmetric}, reflection test {reflected}",
    )

    for n in s.minimal_generators:
        ap = s.apery_set(n)
        rec.check(
            len(ap) == n and max(ap) == s.frobenius + n,
            "semigroupFacts:apery-shape",
            details=f"n={n} apery={sorted(ap)}",
        )


# --------------------------------------------------------------------------
# ideal-calculus facts


def suite_colon_adjunction(ctx: SemigroupContext, rec: Recorder) -> None:
    """G inside E - F exactly when G + F inside E, over all class triples.

    All ideals in play are flattened onto one absolute window so the triple
    loop is two mask tests per case.
    """
    classes = ctx.classes
    nc = len(classes)
    width = ctx.s.frobenius + 1
    base = -(width + 2)
    nbits = 4 * width + 8
    full = (1 << nbits) - 1
    absm = [e.abs_mask(base, nbits) for e in classes]
    colon_not = [
        [full & ~difference(e, f).abs_mask(base, nbits) for f in classes]
        for e in classes
    ]
    sums_fg = [
        [ideal_sum(f, g).abs_mask(base, nbits) for g in classes] for f in classes
    ]
    for ei in range(nc):
        not_e = full & ~absm[ei]
        colon_row = colon_not[ei]
        for fi in range(nc):
            not_colon = colon_row[fi]
            sums_row = sums_fg[fi]
            for gi, am in enumerate(absm):
                if (am & not_colon == 0) != (sums_row[gi] & not_e == 0):
                    rec.violations.append(
                        Witness(
                            semigroup=rec.semigroup,
                            ideals=(
                                format_ideal(classes[ei]),
                                format_ideal(classes[fi]),
                                format_ideal(classes[gi]),
                            ),
                            check="colonAdjunction:biconditional",
                            details=f"G in E-F is {am & not_colon == 0} but "
                            f"G+F in E is {sums_row[gi] & not_e == 0}",
                        )
                    )
    rec.checks += nc * nc * nc


def suite_biduality(ctx: SemigroupContext, rec: Recorder) -> None:
    """Canonical biduality up to translation; the ring bidual contains E
    and equals it exactly on reflexives."""
    for e in ctx.classes:
        dd = ctx.can_dual(e)
        ddd = canonical_dual(dd)
        rec.check(
            is_translate(e, ddd) is not None,
            "biduality:canonical-involution",
            ideals=(e,),
            details=lambda e=e, ddd=ddd: _sides(("E", e), ("DDE", ddd)),
        )
        bidual = ring_dual(ctx.ring_dual(e))
        rec.check(
            is_subset(e, bidual),
            "biduality:ring-bidual-contains",
            ideals=(e,),
            details=lambda e=e, bidual=bidual: _sides(("E", e), ("bidual", bidual)),
        )
        rec.check(
            (bidual == e) == ctx.reflexive(e),
            "biduality:reflexive-iff-equal",
            ideals=(e,),
            details=lambda e=e, bidual=bidual: _sides(("E", e), ("bidual", bidual)),
        )


def suite_syzygy_exactness(ctx: SemigroupContext, rec: Recorder) -> None:
    """Per-degree dimension count of 0 -> J(-b) -> S(-a) + S(-b) -> E -> 0
    for every 2-generated class: the independent syzygy oracle."""
    s = ctx.s
    for e in ctx.two_generated():
        a, b = ctx.mingens(e)
        j = _syzygy_raw(e)
        bad = None
        for d in range(e.min - 1, a + b + 2 * s.frobenius + 3):
            lhs = int(s.contains(d - a)) + int(s.contains(d - b))
            rhs = int(e.contains(d)) + int(j.contains(d - b))
            if lhs != rhs:
                bad = (d, lhs, rhs)
                break
        rec.check(
            bad is None,
            "syzygyExactness:per-degree",
            ideals=(e, j),
            details="" if bad is None else f"degree {bad[0]}: {bad[1]} != {bad[2]}",
        )


def suite_trace_facts(ctx: SemigroupContext, rec: Recorder) -> None:
    """Translation invariance of the trace, trace inside the ring, and
    monotonicity under generation by translates."""
    width = ctx.s.frobenius + 1
    for e in ctx.classes:
        tr = ctx.trace(e)
        shifted_ok = all(
            trace_ideal(translate(e, x)) == tr for x in (-width - 1, -1, 1, width + 1)
        )
        rec.check(
            shifted_ok,
            "traceFacts:translation-invariant",
            ideals=(e,),
            details=lambda tr=tr: _sides(("tr", tr)),
        )
        rec.check(
            is_subset(tr, ctx.unit),
            "traceFacts:inside-ring",
            ideals=(e,),
            details=lambda tr=tr: _sides(("tr", tr)),
        )
    for e in ctx.classes:
        tr_e = ctx.trace(e)
        for h in ctx.classes:
            tr_gen = ctx.trace(ideal_sum(e, h))
            rec.check(
                is_subset(tr_gen, tr_e),
                "traceFacts:generation-monotone",
                ideals=(e, h),
                details=lambda a=tr_gen, b=tr_e: _sides(("tr(E+H)", a), ("tr(E)", b)),
            )


# --------------------------------------------------------------------------
# annihilator facts


def suite_conductor_stable_ann(ctx: SemigroupContext, rec: Recorder) -> None:
    """The stable annihilator of the normalization equals the conductor."""
    got = ctx.stable_ann(ctx.nat)
    rec.check(
        got == ctx.conductor,
        "conductorStableAnn:normalization",
        ideals=(ctx.nat,),
        details=_sides(("ann", got), ("conductor", ctx.conductor)),
    )


def suite_wang_lower_bound(ctx: SemigroupContext, rec: Recorder) -> None:
    """The conductor annihilates stably: it sits inside every stable
    annihilator."""
    for e in ctx.classes:
        got = ctx.stable_ann(e)
        rec.check(
            is_subset(ctx.conductor, got),
            "wangLowerBound:conductor-subset",
            ideals=(e,),
            details=lambda got=got, c=ctx.conductor: _sides(("conductor", c), ("ann", got)),
        )


def suite_lemma_chain(ctx: SemigroupContext, rec: Recorder) -> None:
    """ann(D Omega E) inside ann(E) inside ann(Omega E) for 2-generated
    classes."""
    for e in ctx.two_generated():
        omega_e = normalize(_syzygy_raw(e))[0]
        left = ctx.stable_ann(ctx.can_dual(omega_e))
        mid = ctx.stable_ann(e)
        right = ctx.stable_ann(omega_e)
        rec.check(
            is_subset(left, mid) and is_subset(mid, right),
            "lemmaChain:inclusions",
            ideals=(e, omega_e),
            details=lambda a=left, b=mid, c=right: _sides(
                ("ann(DW)", a), ("ann(E)", b), ("ann(W)", c)
            ),
        )


def suite_prop_syzygy_stability(ctx: SemigroupContext, rec: Recorder) -> None:
    """If the canonical dual of the syzygy is reflexive, the annihilators of
    E and its syzygy agree."""
    for e in ctx.two_generated():
        omega_e = normalize(_syzygy_raw(e))[0]
        if not ctx.reflexive(ctx.can_dual(omega_e)):
            continue
        rec.check(
            ctx.stable_ann(e) == ctx.stable_ann(omega_e),
            "propSyzygyStability:equal-annihilators",
            ideals=(e, omega_e),
            details=lambda a=ctx.stable_ann(e), b=ctx.stable_ann(omega_e): _sides(
                ("ann(E)", a), ("ann(W)", b)
            ),
        )


def suite_cocohom_duality(ctx: SemigroupContext, rec: Recorder) -> None:
    """If E and its canonical dual are both reflexive their stable
    annihilators agree."""
    for e in ctx.classes:
        d = ctx.can_dual(e)
        if not (ctx.reflexive(e) and ctx.reflexive(d)):
            continue
        rec.check(
            ctx.stable_ann(e) == ctx.stable_ann(d),
            "cocohomDuality:equal-annihilators",
            ideals=(e, d),
            details=lambda a=ctx.stable_ann(e), b=ctx.stable_ann(d): _sides(
                ("ann(E)", a), ("ann(DE)", b)
            ),
        )


def suite_trace_containment(ctx: SemigroupContext, rec: Recorder) -> None:
    """A reflexive canonical dual forces the trace inside the canonical
    trace."""
    tr_k = ctx.trace(ctx.k)
    for e in ctx.classes:
        if not ctx.reflexive(ctx.can_dual(e)):
            continue
        rec.check(
            is_subset(ctx.trace(e), tr_k),
            "traceContainment:inside-canonical-trace",
            ideals=(e,),
            details=lambda a=ctx.trace(e), b=tr_k: _sides(("tr(E)", a), ("tr(K)", b)),
        )


def suite_trace_criterion(ctx: SemigroupContext, rec: Recorder) -> None:
    """For canonical reduction number at most 2: the canonical dual of a
    reflexive class is reflexive exactly when its trace sits inside the
    canonical trace.  Skips semigroups with larger reduction number."""
    if ctx.canred > 2:
        return
    tr_k = ctx.trace(ctx.k)
    for e in ctx.classes:
        if not ctx.reflexive(e):
            continue
        dual_refl = ctx.reflexive(ctx.can_dual(e))
        tr_in = is_subset(ctx.trace(e), tr_k)
        rec.check(
            dual_refl == tr_in,
            "traceCriterion:biconditional",
            ideals=(e,),
            details=lambda dual_refl=dual_refl, tr_in=tr_in, a=ctx.trace(e), b=tr_k: (
                f"dual reflexive {dual_refl}, trace containment {tr_in}; "
                + _sides(("tr(E)", a), ("tr(K)", b))
            ),
        )


# --------------------------------------------------------------------------
# Ulrich / blowup / reduction facts


def suite_ulrich_facts(ctx: SemigroupContext, rec: Recorder) -> None:
    """Ulrich characterizations: via the blowup, via the two duals, the
    Hom-stability, the canonical powers, the normalization, and the
    blowup-conductor versus trace comparison."""
    k = ctx.k
    for e in ctx.classes:
        ulrich_k = is_ulrich(e, k)
        duals_match = is_translate(ctx.can_dual(e), ctx.ring_dual(e)) is not None
        rec.check(
            ulrich_k == duals_match,
            "ulrichFacts:dual-characterization",
            ideals=(e,),
            details=f"K-Ulrich {ulrich_k}, ring dual matches canonical dual {duals_match}"
            if ulrich_k != duals_match
            else "",
        )
        if ulrich_k:
            rec.check(
                ctx.reflexive(ctx.can_dual(e)),
                "ulrichFacts:dual-reflexive",
                ideals=(e,),
                details=lambda d=ctx.can_dual(e): _sides(("DE", d)),
            )

        bid = difference(ctx.unit, ctx.blowup_of(e))
        tr = ctx.trace(e)
        equality = bid == tr
        translate_dual = is_translate(ctx.ring_dual(e), tr) is not None
        rec.check(
            is_subset(bid, tr),
            "ulrichFacts:b-inside-trace",
            ideals=(e,),
            details=lambda a=bid, b=tr: _sides(("b", a), ("tr", b)),
        )
        rec.check(
            equality == translate_dual,
            "ulrichFacts:b-equality-iff-dual-trace",
            ideals=(e,),
            details=f"b==tr is {equality}, tr translate of dual is {translate_dual}"
            if equality != translate_dual
            else "",
        )

    classes = ctx.classes
    unit = ctx.unit
    for i in classes:
        bl = ctx.blowup_of(i)
        ulrich_row = []
        for e in classes:
            u = is_ulrich(e, i)
            ulrich_row.append(u)
            via_blowup = ideal_sum(bl, e) == e
            rec.check(
                u == via_blowup,
                "ulrichFacts:blowup-characterization",
                ideals=(e, i),
                details=f"I-Ulrich {u}, module over blowup {via_blowup}"
                if u != via_blowup
                else "",
            )
        if i == unit:
            continue  # every module is S-Ulrich; Hom-stability says nothing
        for e, u in zip(classes, ulrich_row):
            if not u:
                continue
            bad = None
            for f in classes:
                hom = difference(f, e)
                if not is_ulrich(hom, i):
                    bad = (f, hom)
                    break
            rec.check(
                bad is None,
                "ulrichFacts:hom-stability",
                ideals=(e, i) if bad is None else (e, i, bad[0], bad[1]),
                details="" if bad is None else _sides(("F", bad[0]), ("F-E", bad[1])),
            )

    canred = ctx.canred
    top = max(ctx.s.multiplicity - 1, canred)
    for n in range(canred, top + 2):
        power = n_fold_sum(k, n)
        rec.check(
            is_ulrich(power, k),
            "ulrichFacts:canonical-powers",
            ideals=(power,),
            details=f"n={n}",
        )

    rec.check(
        is_ulrich(ctx.nat, k),
        "ulrichFacts:normalization-is-ulrich",
        ideals=(ctx.nat,),
    )


def suite_canred_facts(ctx: SemigroupContext, rec: Recorder) -> None:
    """Reduction number facts: Gorenstein at most 1, the trace/dual
    criterion for at most 2, the almost-Gorenstein bound, and the
    multiplicity bound."""
    canred = ctx.canred
    inv = ctx.inv
    rec.check(
        inv.symmetric == (canred <= 1),
        "canredFacts:gorenstein-iff-le-1",
        details=f"symmetric {inv.symmetric}, can.red {canred}",
    )
    tr_k = ctx.trace(ctx.k)
    dual_k = ctx.ring_dual(ctx.k)
    rec.check(
        (canred <= 2) == (is_translate(dual_k, tr_k) is not None),
        "canredFacts:le-2-iff-trace-is-dual",
        ideals=(ctx.k,),
        details=_sides(("tr(K)", tr_k), ("K*", dual_k)) + f"; can.red {canred}",
    )
    if inv.almost_symmetric:
        rec.check(
            canred <= 2,
            "canredFacts:almost-implies-le-2",
            details=f"can.red {canred}",
        )
    rec.check(
        canred <= max(ctx.s.multiplicity - 1, 0),
        "canredFacts:multiplicity-bound",
        details=f"can.red {canred}, multiplicity {ctx.s.multiplicity}",
    )


def suite_ag_closure(ctx: SemigroupContext, rec: Recorder) -> None:
    """Almost symmetric semigroups: every non-principal reflexive class is
    Ulrich for the canonical ideal and the duality-closure shadow holds."""
    if not ctx.inv.almost_symmetric:
        return
    for e in ctx.classes:
        if e == ctx.unit or not ctx.reflexive(e):
            continue
        rec.check(
            is_ulrich(e, ctx.k),
            "agClosure:reflexive-is-omega-ulrich",
            ideals=(e,),
        )
    closure, witness = ann_mod.duality_closure_shadow(ctx.s)
    rec.check(
        closure,
        "agClosure:duality-closure",
        ideals=() if witness is None else (witness,),
        details="" if closure else "closure fails at the listed class",
    )


def suite_theorem_b(ctx: SemigroupContext, rec: Recorder) -> None:
    """Almost symmetric semigroups: the category-wide annihilator shadow
    equals the conductor."""
    if not ctx.inv.almost_symmetric:
        return
    got = ctx.category_ann
    rec.check(
        got == ctx.conductor,
        "theoremB:category-annihilator-is-conductor",
        details=_sides(("category", got), ("conductor", ctx.conductor)),
    )


def suite_med_shadow(ctx: SemigroupContext, rec: Recorder) -> None:
    """Singular MED semigroups: almost symmetry forces the stable
    annihilator of the dual of the maximal-ideal class to be the maximal
    ideal, plus duality closure.  The converse only holds over infinite
    residue fields, so unexpected converse indicators are informational."""
    if not ctx.inv.med or ctx.s.is_naturals:
        return
    m_class = normalize(ctx.mset)[0]
    indicator = ctx.stable_ann(ctx.can_dual(m_class)) == ctx.mset
    closure, _ = ann_mod.duality_closure_shadow(ctx.s)
    if ctx.inv.almost_symmetric:
        rec.check(
            indicator,
            "medShadow:ann-dual-maximal",
            ideals=(m_class,),
            details=_sides(
                ("ann(D m)", ctx.stable_ann(ctx.can_dual(m_class))), ("m", ctx.mset)
            ),
        )
        rec.check(closure, "medShadow:duality-closure")
    elif indicator or closure:
        rec.info(
            "medShadow:converse-indicator",
            ideals=(m_class,),
            details=f"not almost symmetric yet ann(Dm)=m is {indicator}, "
            f"closure is {closure}",
        )


def suite_far_flung(ctx: SemigroupContext, rec: Recorder) -> None:
    """Far-flung semigroups (canonical trace equals the conductor): the
    only non-principal reflexive class with reflexive dual is the
    normalization."""
    if not ctx.classification.far_flung_gorenstein:
        return
    for e in ctx.classes:
        if e == ctx.unit or not ctx.reflexive(e):
            continue
        if not ctx.reflexive(ctx.can_dual(e)):
            continue
        rec.check(
            e == ctx.nat,
            "farFlung:reflexive-pair-is-normalization",
            ideals=(e,),
            details=_sides(("E", e), ("normalization", ctx.nat)),
        )


def suite_multiplicity3(ctx: SemigroupContext, rec: Recorder) -> None:
    """Multiplicity three forces reduction number at most 2 and hence the
    trace criterion biconditional."""
    if ctx.s.multiplicity != 3:
        return
    rec.check(
        ctx.canred <= 2,
        "multiplicity3:canred-le-2",
        details=f"can.red {ctx.canred}",
    )
    tr_k = ctx.trace(ctx.k)
    for e in ctx.classes:
        if not ctx.reflexive(e):
            continue
        rec.check(
            ctx.reflexive(ctx.can_dual(e)) == is_subset(ctx.trace(e), tr_k),
            "multiplicity3:trace-biconditional",
            ideals=(e,),
            details=_sides(("tr(E)", ctx.trace(e)), ("tr(K)", tr_k)),
        )


REGISTRY: dict[str, object] = {
    "semigroupFacts": suite_semigroup_facts,
    "colonAdjunction": suite_colon_adjunction,
    "biduality": suite_biduality,
    "syzygyExactness": suite_syzygy_exactness,
    "traceFacts": suite_trace_facts,
    "conductorStableAnn": suite_conductor_stable_ann,
    "wangLowerBound": suite_wang_lower_bound,
    "lemmaChain": suite_lemma_chain,
    "propSyzygyStability": suite_prop_syzygy_stability,
    "cocohomDuality": suite_cocohom_duality,
    "traceContainment": suite_trace_containment,
    "traceCriterion": suite_trace_criterion,
    "ulrichFacts": suite_ulrich_facts,
    "canredFacts": suite_canred_facts,
    "agClosure": suite_ag_closure,
    "theoremB": suite_theorem_b,
    "medShadow": suite_med_shadow,
    "farFlung": suite_far_flung,
    "multiplicity3": suite_multiplicity3,
}
