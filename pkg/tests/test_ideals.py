import pytest

from nslab import (
    NotTwoGenerated,
    ParentMismatch,
    canonical_dual,
    canonical_ideal,
    difference,
    enumerate_ideal_classes,
    format_ideal,
    ideal_from_generators,
    intersect,
    is_reflexive,
    is_translate,
    maximal_ideal,
    minimal_generators,
    n_fold_sum,
    naturals,
    normalization_ideal,
    normalize,
    parse_ideal,
    ring_dual,
    semigroup_from_generators,
    sum_ideals,
    syzygy_two_generated,
    trace_ideal,
    translate,
    unit_ideal,
)

from oracles import SlowSet, agrees, from_ideal, slow_colon, slow_intersect, slow_sum


S357 = semigroup_from_generators([3, 5, 7])
S23 = semigroup_from_generators([2, 3])
S345 = semigroup_from_generators([3, 4, 5])
S567 = semigroup_from_generators([5, 6, 7])
NAT = naturals()


def members(e, hi=40):
    return e.members_below(hi)


def test_ideal_from_generators_examples():
    assert ideal_from_generators(S357, {0}) == unit_ideal(S357)
    k_like = ideal_from_generators(S357, {0, 2})
    assert members(k_like, 9) == [0, 2, 3, 5, 6, 7, 8]
    assert ideal_from_generators(S23, {0, 1}) == normalization_ideal(S23)


def test_ideal_from_generators_matches_slow_union():
    for gens in [{0}, {0, 2}, {-3, 1}, {4}, {0, 1, 2}]:
        e = ideal_from_generators(S357, gens)
        slow = SlowSet(
            {g + s for g in gens for s in S357.members_below(30)},
            max(gens) + S357.frobenius + 1,
        )
        assert agrees(e, slow)


def test_normalize_examples():
    m = maximal_ideal(S357)
    norm, off = normalize(m)
    assert off == 3
    assert members(norm, 6) == [0, 2, 3, 4, 5]
    assert normalize(unit_ideal(S357)) == (unit_ideal(S357), 0)
    ray = ideal_from_generators(S357, {5, 6, 7})
    norm2, off2 = normalize(ray)
    assert off2 == 5
    assert norm2 == normalization_ideal(S357)


def test_sum_examples():
    k = canonical_ideal(S357)
    kk = sum_ideals(k, k)
    assert members(kk, 6) == [0, 2, 3, 4, 5]
    e = ideal_from_generators(S357, {0, 4})
    assert sum_ideals(e, unit_ideal(S357)) == e
    s345 = semigroup_from_generators([3, 4, 5])
    k345 = canonical_ideal(s345)
    assert members(sum_ideals(k345, k345), 5) == [0, 1, 2, 3, 4]


def test_n_fold_sum_examples():
    k = canonical_ideal(S357)
    assert n_fold_sum(k, 0) == unit_ideal(S357)
    assert n_fold_sum(k, 2) == sum_ideals(k, k)
    assert n_fold_sum(k, 3) == sum_ideals(k, sum_ideals(k, k))
    assert members(n_fold_sum(k, 3), 6) == [0, 2, 3, 4, 5]


def test_difference_examples():
    cond = difference(unit_ideal(S357), normalization_ideal(S357))
    assert members(cond, 9) == [5, 6, 7, 8]
    e = ideal_from_generators(S357, {0, 2})
    assert difference(e, unit_ideal(S357)) == e
    s_minus_k = difference(unit_ideal(S357), canonical_ideal(S357))
    assert members(s_minus_k, 8) == [3, 5, 6, 7]


def test_parent_mismatch():
    with pytest.raises(ParentMismatch):
        sum_ideals(unit_ideal(S357), unit_ideal(S23))
    with pytest.raises(ParentMismatch):
        difference(unit_ideal(S357), unit_ideal(S23))
    with pytest.raises(ParentMismatch):
        is_translate(unit_ideal(S357), unit_ideal(S23))


def test_canonical_ideal_examples():
    assert canonical_ideal(S23) == unit_ideal(S23)
    assert members(canonical_ideal(S357), 8) == [0, 2, 3, 5, 6, 7]
    assert members(canonical_ideal(S345), 5) == [0, 1, 3, 4]
    assert canonical_ideal(NAT) == unit_ideal(NAT)


def test_canonical_dual_examples():
    assert canonical_dual(unit_ideal(S357)) == canonical_ideal(S357)
    assert canonical_dual(canonical_ideal(S357)) == unit_ideal(S357)
    m567, _ = normalize(maximal_ideal(S567))
    d = canonical_dual(m567)
    norm, _ = normalize(d)
    assert members(norm, 8) == [0, 1, 5, 6, 7]


def test_ring_dual_examples():
    assert ring_dual(unit_ideal(S357)) == unit_ideal(S357)
    assert members(ring_dual(normalization_ideal(S357)), 9) == [5, 6, 7, 8]
    assert members(ring_dual(canonical_ideal(S357)), 8) == [3, 5, 6, 7]


def test_trace_examples():
    assert trace_ideal(unit_ideal(S357)) == unit_ideal(S357)
    tr_k = trace_ideal(canonical_ideal(S357))
    assert tr_k == maximal_ideal(S357)
    tr_n = trace_ideal(normalization_ideal(S357))
    assert members(tr_n, 9) == [5, 6, 7, 8]


def test_minimal_generators_examples():
    assert minimal_generators(canonical_ideal(S357)) == (0, 2)
    assert minimal_generators(unit_ideal(S357)) == (0,)
    assert minimal_generators(normalization_ideal(S357)) == (0, 1, 2)
    assert minimal_generators(maximal_ideal(S357)) == (3, 5, 7)


def test_is_reflexive():
    assert is_reflexive(unit_ideal(S357))
    m567, _ = normalize(maximal_ideal(S567))
    assert is_reflexive(m567)
    # the canonical class is a syzygy only in the symmetric case, and
    # <3,5,7> is not symmetric: its bidual strictly grows
    k = canonical_ideal(S357)
    assert not is_reflexive(k)
    bidual = ring_dual(ring_dual(k))
    assert members(bidual, 5) == [0, 2, 3, 4]
    assert is_reflexive(canonical_ideal(S23))  # symmetric case
    assert is_reflexive(normalization_ideal(S357))


def test_is_translate():
    cond = ring_dual(normalization_ideal(S357))
    assert is_translate(unit_ideal(S357), cond) is None
    assert is_translate(normalization_ideal(S357), cond) == 5
    k = canonical_ideal(S357)
    assert is_translate(k, k) == 0
    assert is_translate(k, translate(k, -4)) == -4


def test_syzygy_examples():
    k = canonical_ideal(S357)
    omega = syzygy_two_generated(k)
    assert members(omega, 6) == [0, 2, 3, 4, 5]
    m23 = maximal_ideal(S23)
    omega23 = syzygy_two_generated(m23)
    assert omega23 == normalization_ideal(S23)  # m is 2-generated, syzygy ~ m
    with pytest.raises(NotTwoGenerated):
        syzygy_two_generated(unit_ideal(S357))
    with pytest.raises(NotTwoGenerated):
        syzygy_two_generated(normalization_ideal(S357))


def test_syzygy_of_translate_matches():
    k = canonical_ideal(S357)
    assert syzygy_two_generated(translate(k, 7)) == syzygy_two_generated(k)


def test_enumerate_ideal_classes():
    assert len(enumerate_ideal_classes(S23)) == 2
    classes = enumerate_ideal_classes(S357)
    assert len(classes) == 6
    adjoined = [sorted(set(c.members_below(5)) - {0, 3}) for c in classes]
    assert adjoined == [[], [2], [4], [1, 4], [2, 4], [1, 2, 4]]
    assert len(enumerate_ideal_classes(NAT)) == 1
    for c in classes:
        assert c.min == 0
        c.validate()
    assert unit_ideal(S357) in classes.classes
    assert normalization_ideal(S357) in classes.classes


def test_operations_match_slow_oracle():
    from nslab import enumerate_up_to_genus

    for s in enumerate_up_to_genus(5):
        classes = list(enumerate_ideal_classes(s))
        pairs = [(e, f) for e in classes for f in classes]
        for e, f in pairs:
            assert agrees(sum_ideals(e, f), slow_sum(from_ideal(e), from_ideal(f)))
            assert agrees(difference(e, f), slow_colon(from_ideal(e), from_ideal(f)))
            assert agrees(intersect(e, f), slow_intersect(from_ideal(e), from_ideal(f)))


def test_shifted_operands_match_slow_oracle():
    shifts = (-6, -1, 2, 9)
    classes = list(enumerate_ideal_classes(S357))
    for e in classes:
        for f in classes:
            for xe in shifts:
                for xf in shifts:
                    a, b = translate(e, xe), translate(f, xf)
                    assert agrees(sum_ideals(a, b), slow_sum(from_ideal(a), from_ideal(b)))
                    assert agrees(difference(a, b), slow_colon(from_ideal(a), from_ideal(b)))


def test_textual_format():
    assert format_ideal(canonical_ideal(S357)) == "{0,2,3}∪[5,∞)"
    assert format_ideal(normalization_ideal(S357)) == "[0,∞)"
    assert format_ideal(maximal_ideal(S357)) == "{3}∪[5,∞)"
    assert format_ideal(unit_ideal(NAT)) == "[0,∞)"


def test_textual_parse_roundtrip():
    for e in enumerate_ideal_classes(S357):
        assert parse_ideal(S357, format_ideal(e)) == e
    # redundant thresholds denote the same set
    cond = ring_dual(normalization_ideal(S357))
    assert parse_ideal(S357, "{5,6,7}∪[8,∞)") == cond
    assert parse_ideal(S357, "[5,∞)") == cond
    assert parse_ideal(S357, "{0,2,3}∪[5,∞)") == canonical_ideal(S357)
    with pytest.raises(ValueError):
        parse_ideal(S357, "{0,1}∪[5,∞)")  # not closed under the action
    with pytest.raises(ValueError):
        parse_ideal(S357, "0,1,2")


def test_ideals_over_naturals():
    ray = ideal_from_generators(NAT, {-2, 4})
    assert ray.min == -2
    assert ray.contains(-2) and ray.contains(10) and not ray.contains(-3)
    assert sum_ideals(ray, ray).min == -4
    assert difference(ray, ray) == unit_ideal(NAT)
    assert trace_ideal(ray) == unit_ideal(NAT)
    assert is_reflexive(ray)
    assert minimal_generators(ray) == (-2,)


def test_operator_sugar():
    k = canonical_ideal(S357)
    assert k + unit_ideal(S357) == k
    assert unit_ideal(S357) - k == ring_dual(k)


def test_constructed_ideals_validate():
    from nslab import enumerate_up_to_genus

    for s in enumerate_up_to_genus(4):
        classes = list(enumerate_ideal_classes(s))
        for e in classes:
            trace_ideal(e).validate()
            ring_dual(e).validate()
            canonical_dual(e).validate()
            for f in classes:
                sum_ideals(e, f).validate()
                difference(e, f).validate()
                intersect(e, f).validate()
