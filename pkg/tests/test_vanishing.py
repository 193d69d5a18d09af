from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dtorus.criteria import factorize
from dtorus.errors import NotApplicable, ZeroEigenvalue
from dtorus.vanishing import (
    RootMultiset,
    classify_cos4,
    cp_delta,
    evertse_bound,
    find_cos4_partners,
    find_vanishing_multiset,
    fmvs_bound,
    is_admissible,
    is_symmetric_rotation,
    is_vanishing,
    minimal_vanishing_sums,
    w_membership,
    _cos_sum_is_zero,
)

moduli = st.integers(min_value=2, max_value=40)
exponent_lists = st.lists(st.integers(min_value=0, max_value=200), min_size=1, max_size=8)


def test_is_vanishing_examples():
    assert is_vanishing(RootMultiset(5, (0, 1, 2, 3, 4)))
    assert not is_vanishing(RootMultiset(6, (0, 1)))
    assert is_vanishing(RootMultiset(12, (1, 7)))


@given(moduli, exponent_lists, st.integers(min_value=-50, max_value=50))
def test_rotation_invariance(n, exps, shift):
    a = RootMultiset(n, tuple(exps))
    b = RootMultiset(n, tuple(e + shift for e in exps))
    assert is_vanishing(a) == is_vanishing(b)


@given(moduli, exponent_lists, st.integers(min_value=1, max_value=200))
def test_galois_invariance(n, exps, r):
    if gcd(r, n) != 1:
        r = 1 + n  # coprime fallback keeps the example useful
    a = RootMultiset(n, tuple(exps))
    b = RootMultiset(n, tuple(r * e for e in exps))
    assert is_vanishing(a) == is_vanishing(b)


def test_w_membership_examples():
    assert w_membership(15, 8) == (True, (1, 1))
    assert w_membership(15, 7) == (False, None)
    assert w_membership(8, 5)[0] is False
    ok, witness = w_membership(8, 4)
    assert ok and witness == (2,)
    assert w_membership(30, 0) == (True, (0, 0, 0))


@given(st.integers(min_value=2, max_value=12), st.integers(min_value=1, max_value=6))
def test_w_membership_matches_search(n, length):
    found = find_vanishing_multiset(n, length)
    member, witness = w_membership(n, length)
    assert (found is not None) == member
    if found is not None:
        assert is_vanishing(found)
        assert len(found.exponents) == length
    if member:
        primes = factorize(n).primes
        assert sum(b * p for b, p in zip(witness, primes)) == length


def test_classify_cos4_families():
    f = Fraction
    c = classify_cos4([f(2, 5), f(4, 5), f(1, 2), f(1, 3)])
    assert c.family == "III"
    c = classify_cos4([f(1, 7), f(6, 7), f(1, 5), f(4, 5)])
    assert c.family == "I" and c.parameters == (f(1, 7), f(1, 5))
    c = classify_cos4([f(3, 10), f(2, 3) - f(3, 10), f(2, 3) + f(3, 10), f(1, 2)])
    assert c.family == "II" and c.parameters == (f(3, 10),)
    c = classify_cos4([0, 0, 0, 0])
    assert c.family == "NotVanishing" and c.quadruple is None
    # all sporadic families, both mirror quadruples
    for quad, fam in [
        (((3, 5), (1, 5), (1, 2), (2, 3)), "III"),
        (((1, 5), (3, 5), (1, 3), (1, 1)), "IV"),
        (((4, 5), (2, 5), (2, 3), (0, 1)), "IV"),
        (((2, 5), (7, 15), (13, 15), (1, 3)), "V"),
        (((3, 5), (8, 15), (2, 15), (2, 3)), "V"),
        (((1, 15), (11, 15), (4, 5), (1, 3)), "VI"),
        (((14, 15), (4, 15), (1, 5), (2, 3)), "VI"),
        (((2, 7), (4, 7), (6, 7), (1, 3)), "VII"),
        (((5, 7), (3, 7), (1, 7), (2, 3)), "VII"),
    ]:
        got = classify_cos4([f(a, b) for a, b in quad])
        assert got.family == fam, (quad, got)


def test_classify_cos4_overlap_reports_lowest_family():
    # delta = 1/6 lies in family II but also pairs up as family I
    f = Fraction
    c = classify_cos4([f(1, 6), f(1, 2), f(5, 6), f(1, 2)])
    assert c.family == "I"
    assert "II" in c.overlaps


def test_classify_cos4_reconstruction_matches_input():
    f = Fraction
    for quad in [
        (f(1, 7), f(6, 7), f(1, 5), f(4, 5)),
        (f(3, 10), f(11, 30), f(29, 30), f(1, 2)),
        (f(2, 5), f(4, 5), f(1, 2), f(1, 3)),
    ]:
        c = classify_cos4(quad)
        assert c.family != "NotVanishing"
        assert sorted(c.quadruple) == sorted(quad)
        assert _cos_sum_is_zero(c.quadruple)


@given(
    st.tuples(
        st.fractions(min_value=0, max_value=1, max_denominator=20),
        st.fractions(min_value=0, max_value=1, max_denominator=20),
        st.fractions(min_value=0, max_value=1, max_denominator=20),
        st.fractions(min_value=0, max_value=1, max_denominator=20),
    )
)
def test_classify_cos4_agrees_with_exact_sum(quad):
    c = classify_cos4(quad)
    assert (c.family == "NotVanishing") == (not _cos_sum_is_zero(quad))


def test_find_cos4_partners_example_60():
    # equal-eigenvalue partners of mu(24, 10); the complements 30 - k of the
    # vanishing-sum indices (12, 15) and (2, 22)
    assert set(find_cos4_partners(60, 24, 10)) == {(8, 28), (15, 18)}


def test_find_cos4_partners_small():
    assert find_cos4_partners(5, 1, 2) == []
    assert find_cos4_partners(12, 0, 4) == [(2, 3)]
    with pytest.raises(ZeroEigenvalue):
        find_cos4_partners(12, 0, 6)


@given(st.integers(min_value=3, max_value=30))
def test_partner_count_never_exceeds_two(n):
    half = n // 2
    for k1 in range(half + 1):
        for k2 in range(k1, half + 1):
            try:
                partners = find_cos4_partners(n, k1, k2)
            except ZeroEigenvalue:
                continue
            assert len(partners) <= 2


def test_minimal_vanishing_sums_n5():
    found = minimal_vanishing_sums(5, 5)
    assert [(s.multiset.exponents, s.minimal) for s in found] == [
        ((0, 1, 2, 3, 4), True)
    ]


def test_minimal_vanishing_sums_n6():
    found = minimal_vanishing_sums(6, 3)
    got = {s.multiset.exponents for s in found}
    assert got == {(0, 3), (1, 4), (2, 5), (0, 2, 4), (1, 3, 5)}
    assert all(s.minimal for s in found)


def test_minimal_vanishing_sums_tags_decomposable():
    found = minimal_vanishing_sums(6, 4)
    by_exps = {s.multiset.exponents: s.minimal for s in found}
    assert by_exps[(0, 1, 3, 4)] is False  # two antipodal pairs
    assert by_exps[(0, 3)] is True


def test_symmetric_rotation():
    assert is_symmetric_rotation(RootMultiset(6, (0, 2, 4))) == (3, 0)
    assert is_symmetric_rotation(RootMultiset(12, (1, 7))) == (2, 1)
    assert is_symmetric_rotation(RootMultiset(30, (0, 1, 2))) is None
    with pytest.raises(NotApplicable):
        is_symmetric_rotation(RootMultiset(30, (0, 1, 2, 3)))  # size 4 not prime
    with pytest.raises(NotApplicable):
        is_symmetric_rotation(RootMultiset(25, (0, 1)))  # 2 does not divide 25


def test_admissible():
    assert is_admissible(RootMultiset(6, (1, 5, 2, 4)))
    assert not is_admissible(RootMultiset(6, (3, 0, 2, 4)))
    assert is_admissible(RootMultiset(8, (0, 0)))
    assert not is_admissible(RootMultiset(8, (1, 2, 3)))


def test_bounds():
    assert evertse_bound(0) == 1
    assert evertse_bound(1) == 4096
    assert evertse_bound(2) == 3**27
    assert fmvs_bound(1) == 1
    assert fmvs_bound(2) == 4096
    assert fmvs_bound(3) == 3**27


def test_cp_delta():
    f = Fraction
    assert cp_delta(3, 0) == [f(0), f(2, 3), f(2, 3)]
    assert cp_delta(3, f(1, 6)) == [f(1, 6), f(1, 2), f(5, 6)]
    assert cp_delta(5, 0) == [f(0), f(2, 5), f(2, 5), f(4, 5), f(4, 5)]


@given(
    st.sampled_from([3, 5, 7]),
    st.fractions(min_value=0, max_value=1, max_denominator=30),
)
def test_cp_delta_always_vanishes(p, delta):
    angles = cp_delta(p, delta)
    assert len(angles) == p
    assert _cos_sum_is_zero(angles)
