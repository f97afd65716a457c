from math import gcd

import pytest
from hypothesis import given, strategies as st

from goodint.arith import divisors, mult_order_ratio
from goodint.goodness import (
    GoodClass,
    GoodnessQuery,
    Parity,
    brute_force_classify,
    classify,
    classify_class,
    is_good,
    necessary_profile,
    witness_search,
)
from oracles import divides_power_sum


@pytest.mark.parametrize(
    "a, b, l, cls, odd, even",
    [
        (2, 1, 3, GoodClass.ODDLY_GOOD, 1, None),
        (2, 1, 5, GoodClass.EVENLY_GOOD, None, 2),
        (2, 1, 7, GoodClass.BAD, None, None),
        (3, 1, 2, GoodClass.BOTH, 1, 2),
        (7, 1, 4, GoodClass.ODDLY_GOOD, 1, None),
        (2, 1, 1, GoodClass.BOTH, 1, 2),
        (2, 1, 9, GoodClass.ODDLY_GOOD, 3, None),
    ],
)
def test_classify_examples(a, b, l, cls, odd, even):
    v = classify(a, b, l)
    assert v.cls is cls
    assert v.witness_odd == odd
    assert v.witness_even == even


def test_order_two_mod_eight_is_not_enough():
    # ord_8(3) = 2 but 8 never divides 3^k + 1
    assert mult_order_ratio(3, 1, 8) == 2
    assert classify_class(3, 1, 8) is GoodClass.BAD
    assert not any(divides_power_sum(8, 3, 1, k) for k in range(1, 50))


def test_odd_part_needs_every_prime_with_valuation_one():
    # 308 = 4 * 7 * 11: 4 | 3 + 1 and 2 || ord_77(3) = 30, yet 11 has ord 5
    assert mult_order_ratio(3, 1, 77) == 30
    assert classify_class(3, 1, 308) is GoodClass.BAD
    assert brute_force_classify(3, 1, 308).cls is GoodClass.BAD


def test_opposite_pair_makes_every_coprime_l_oddly_good():
    for l in range(3, 200):
        assert classify_class(1, -1, l) is GoodClass.ODDLY_GOOD
        assert brute_force_classify(1, -1, l).cls is GoodClass.ODDLY_GOOD
    p = necessary_profile(1, -1, 8)
    assert p.gamma is None and p.beta_range == (2, None)


@pytest.mark.parametrize(
    "a, b, l, parity, expected",
    [(2, 1, 9, Parity.ANY, 3), (2, 1, 5, Parity.ODD, None), (1, 1, 1, Parity.ANY, 1), (2, 1, 5, "even", 2), (4, 1, 2, "any", None)],
)
def test_witness_search_examples(a, b, l, parity, expected):
    assert witness_search(a, b, l, parity) == expected


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(1, 400))
def test_witness_search_finds_smallest(a, b, l):
    if a == 0 or b == 0 or gcd(a, b) != 1:
        return
    k = witness_search(a, b, l)
    limit = 4 * l + 4
    naive = next((j for j in range(1, limit) if divides_power_sum(l, a, b, j)), None)
    assert k == naive


def test_brute_force_examples():
    assert classify(2, 1, 341) == brute_force_classify(2, 1, 341)
    assert brute_force_classify(3, 2, 1).cls is GoodClass.BOTH
    assert brute_force_classify(4, 1, 2).cls is GoodClass.BAD


def test_query_validation():
    with pytest.raises(ValueError):
        GoodnessQuery(2, 4, 3)
    with pytest.raises(ValueError):
        GoodnessQuery(0, 1, 3)
    with pytest.raises(ValueError):
        GoodnessQuery(2, 1, 0)
    with pytest.raises(ValueError):
        classify(6, 4, 5)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 3000))
def test_classify_matches_brute_force(a, b, l):
    if a == 0 or b == 0 or gcd(a, b) != 1:
        return
    assert classify(a, b, l) == brute_force_classify(a, b, l)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(2, 3000))
def test_common_factor_is_bad(a, b, l):
    if a == 0 or b == 0 or gcd(a, b) != 1 or gcd(a * b, l) == 1:
        return
    assert classify_class(a, b, l) is GoodClass.BAD


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 3000))
def test_verdict_invariants(a, b, l):
    if a == 0 or b == 0 or gcd(a, b) != 1:
        return
    v = classify(a, b, l)
    if v.cls is GoodClass.ODDLY_GOOD:
        assert v.witness_odd is not None and v.witness_even is None
    if v.cls is GoodClass.EVENLY_GOOD:
        assert v.witness_even is not None and v.witness_odd is None
    if v.cls is GoodClass.BOTH:
        assert l in (1, 2)
    for k in (v.witness_odd, v.witness_even):
        if k is not None:
            assert divides_power_sum(l, a, b, k)
    if v.witness_odd is not None:
        assert v.witness_odd % 2 == 1
    if v.witness_even is not None:
        assert v.witness_even % 2 == 0


@pytest.mark.parametrize("a, b", [(3, 1), (7, 1), (5, 3), (9, 7), (15, 1), (-3, 5), (31, 1)])
def test_two_power_membership(a, b):
    gamma = (a + b) & -(a + b)
    top = gamma.bit_length() + 2
    for beta in range(1, top + 1):
        assert is_good(a, b, 2**beta) == ((a + b) % 2**beta == 0)


@pytest.mark.parametrize("a, b", [(3, 1), (5, 3), (9, 7), (3, 5)])
def test_doubling(a, b):
    for d in range(3, 1500, 2):
        if gcd(a * b, d) != 1:
            continue
        assert is_good(a, b, d) == is_good(a, b, 2 * d)
        if is_good(a, b, d):
            o = mult_order_ratio(a, b, d)
            assert o == mult_order_ratio(a, b, 2 * d) and o % 2 == 0
            assert classify_class(a, b, d) == classify_class(a, b, 2 * d)


@pytest.mark.parametrize("a, b", [(2, 1), (3, 1), (5, 2)])
def test_divisor_closure(a, b):
    for d in range(3, 800, 2):
        cls = classify_class(a, b, d)
        if not cls.is_good:
            continue
        for j in divisors(d):
            sub = classify_class(a, b, j)
            assert sub.is_good
            if cls is GoodClass.ODDLY_GOOD:
                assert sub.is_oddly_good
            if cls is GoodClass.EVENLY_GOOD:
                assert sub.is_evenly_good


def test_necessary_profile_examples():
    # 15 is bad for (2, 1): ord_3(2) = 2 and ord_5(2) = 4
    assert classify_class(2, 1, 15) is GoodClass.BAD
    with pytest.raises(ValueError):
        necessary_profile(2, 1, 15)

    p = necessary_profile(2, 1, 9)
    assert p.s == 1 and p.v2_order == 1

    p = necessary_profile(7, 1, 4)
    assert p.s is None
    assert p.gamma == 3
    assert p.beta_range == (2, 3)


def test_necessary_profile_consistent_on_range():
    for a, b in [(2, 1), (3, 1), (7, 1), (5, 3), (3, 2)]:
        for l in range(1, 1500):
            if classify_class(a, b, l).is_good:
                p = necessary_profile(a, b, l)
                lo, hi = p.beta_range
                assert lo <= p.beta and (hi is None or p.beta <= hi)
