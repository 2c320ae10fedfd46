"""nslab: exact ideal theory of numerical semigroup rings.

The library models the monomial curve ring attached to a numerical
semigroup entirely in integer combinatorics: fractional ideals are cofinite
integer sets with a finite window representation, and every operation
(sums, colons, canonical duals, traces, blowups, stable annihilators) is an
exact bitmask computation.  On top of the calculus sits a verification
harness that checks the theory exhaustively over all semigroups up to a
genus bound and a certificate builder for the cohomology annihilator ideal.
"""

from .semigroups import (
    EmptyGenerators,
    GcdNotOne,
    InvariantRecord,
    NotAMember,
    NumericalSemigroup,
    apery_set,
    contains,
    enumerate_by_genus,
    enumerate_up_to_genus,
    invariants,
    naturals,
    parse_semigroup,
    semigroup_from_generators,
)
from .ideals import (
    IdealClassList,
    NotTwoGenerated,
    ParentMismatch,
    RelativeIdeal,
    canonical_dual,
    canonical_ideal,
    difference,
    enumerate_ideal_classes,
    format_ideal,
    ideal_from_generators,
    intersect,
    is_reflexive,
    is_subset,
    is_translate,
    maximal_ideal,
    minimal_generators,
    n_fold_sum,
    normalization_ideal,
    normalize,
    parse_ideal,
    ring_dual,
    sum as sum_ideals,
    syzygy_two_generated,
    trace_ideal,
    translate,
    unit_ideal,
)
from .rings import (
    ClassificationRecord,
    InternalBoundExceeded,
    b_ideal,
    blowup,
    canonical_reduction_number,
    classify,
    conductor_ideal,
    is_ulrich,
)
from .annihilators import (
    CaCertificate,
    category_annihilator,
    certify_cohomology_annihilator,
    duality_closure_shadow,
    stable_annihilator,
)
from .suites import REGISTRY, SemigroupContext, Witness
from .harness import (
    SuiteReport,
    UnknownSuite,
    UnsupportedFormat,
    emit_report,
    replay_witness,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "CaCertificate",
    "ClassificationRecord",
    "EmptyGenerators",
    "GcdNotOne",
    "IdealClassList",
    "InternalBoundExceeded",
    "InvariantRecord",
    "NotAMember",
    "NotTwoGenerated",
    "NumericalSemigroup",
    "ParentMismatch",
    "REGISTRY",
    "RelativeIdeal",
    "SemigroupContext",
    "SuiteReport",
    "UnknownSuite",
    "UnsupportedFormat",
    "Witness",
    "apery_set",
    "b_ideal",
    "blowup",
    "canonical_dual",
    "canonical_ideal",
    "canonical_reduction_number",
    "category_annihilator",
    "certify_cohomology_annihilator",
    "classify",
    "conductor_ideal",
    "contains",
    "difference",
    "duality_closure_shadow",
    "emit_report",
    "enumerate_by_genus",
    "enumerate_ideal_classes",
    "enumerate_up_to_genus",
    "format_ideal",
    "ideal_from_generators",
    "intersect",
    "invariants",
    "is_reflexive",
    "is_subset",
    "is_translate",
    "is_ulrich",
    "maximal_ideal",
    "minimal_generators",
    "n_fold_sum",
    "naturals",
    "normalization_ideal",
    "normalize",
    "parse_ideal",
    "parse_semigroup",
    "replay_witness",
    "ring_dual",
    "run_suite",
    "semigroup_from_generators",
    "stable_annihilator",
    "sum_ideals",
    "syzygy_two_generated",
    "trace_ideal",
    "translate",
    "unit_ideal",
]
