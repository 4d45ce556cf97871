import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from goldbach_lab.pairs import (
    NON_PRIME,
    ORDERED,
    PRIME_PAIR,
    UNORDERED,
    breakdown,
    classify_pair,
    divisible_overlap_count,
    divisible_pair_count,
    only_by_count,
    prime_pair_count,
    prime_pair_list,
    total_odd_pairs,
)
from goldbach_lab.sieve import sieve_bound

even_n = st.integers(min_value=3, max_value=1500).map(lambda k: 2 * k)

TABLE_998_ONLY_BY = (
    (3, 330), (5, 68), (7, 28), (11, 12), (13, 8),
    (17, 8), (19, 4), (23, 2), (29, 2), (31, 2),
)


def test_total_odd_pairs_examples():
    assert total_odd_pairs(6) == 1
    assert total_odd_pairs(24) == 10
    assert total_odd_pairs(998) == 497
    assert total_odd_pairs(990) == 493


@pytest.mark.parametrize("bad", [5, 9, 4, 0, -6])
def test_total_odd_pairs_rejects(bad):
    with pytest.raises(ValueError):
        total_odd_pairs(bad)


def test_classify_prime_pair():
    pc = classify_pair(8, 3)
    assert pc.kind == PRIME_PAIR
    assert (pc.x, pc.y) == (3, 5)
    assert pc.assigned_prime is None


def test_classify_non_prime_examples():
    assert classify_pair(998, 9).assigned_prime == 3  # 9 = 3*3
    pc = classify_pair(998, 5)
    assert pc.kind == NON_PRIME
    assert pc.assigned_prime == 3  # 993 = 3 * 331


@pytest.mark.parametrize("n,x", [(8, 4), (8, 1), (8, 7), (10, 11)])
def test_classify_rejects_bad_x(n, x):
    with pytest.raises(ValueError):
        classify_pair(n, x)


def test_ordered_counts_table1():
    assert [prime_pair_count(n) for n in range(6, 25, 2)] == [1, 2, 3, 2, 3, 4, 4, 4, 5, 6]


def test_unordered_counts():
    assert prime_pair_count(90, UNORDERED) == 9
    assert prime_pair_count(94, UNORDERED) == 5
    assert prime_pair_count(96, UNORDERED) == 7


def test_ordered_count_998():
    # brute-enumerated; also the complement of the 998 breakdown total
    assert prime_pair_count(998, ORDERED) == 33


def test_divisible_pair_count_examples():
    assert divisible_pair_count(990, 3) == 165
    assert divisible_pair_count(994, 3) == 328
    assert divisible_pair_count(994, 5) == 196
    assert divisible_pair_count(998, 11) == 88
    assert divisible_pair_count(990, 5) == 99
    assert divisible_overlap_count(990, 5, 3) == 33


def test_divisible_pair_count_rejects_non_prime_p():
    with pytest.raises(ValueError):
        divisible_pair_count(990, 9)
    with pytest.raises(ValueError):
        divisible_pair_count(990, 2)


def test_only_by_examples():
    assert only_by_count(998, 5) == 68
    assert only_by_count(998, 7) == 28
    assert only_by_count(998, 13) == 8
    assert only_by_count(998, 37) == 0
    assert only_by_count(994, 5) == 64
    # (77,23) and (23,77); 77 = 7*11 with 23 prime on the other side
    assert only_by_count(100, 7) == 2


def test_breakdown_998_reproduces_reference_counts():
    b = breakdown(998)
    assert b.rows == TABLE_998_ONLY_BY
    assert b.total == 464
    assert b.total + prime_pair_count(998) == total_odd_pairs(998)


def test_breakdown_small_n_is_empty():
    b = breakdown(6)
    assert b.rows == ()
    assert b.total == 0
    assert prime_pair_count(6) == 1


def test_breakdown_100():
    b = breakdown(100)
    assert b.rows == ((3, 30), (5, 4), (7, 2))
    assert b.total == 48 - prime_pair_count(100)
    assert prime_pair_count(100) == 12


def test_prime_pair_list_examples():
    assert prime_pair_list(10) == [(3, 7), (5, 5), (7, 3)]
    assert prime_pair_list(12) == [(5, 7), (7, 5)]
    unordered = prime_pair_list(100, UNORDERED)
    assert len(unordered) == 6
    assert unordered[0] == (3, 97)
    assert unordered[-1] == (47, 53)


def test_prime_pair_list_length_matches_count():
    for n in range(6, 300, 2):
        assert len(prime_pair_list(n)) == prime_pair_count(n)
        assert len(prime_pair_list(n, UNORDERED)) == prime_pair_count(n, UNORDERED)


def test_partition_identity_small_sweep():
    for n in range(6, 600, 2):
        assert total_odd_pairs(n) == prime_pair_count(n) + breakdown(n).total


def test_witnesses_match_brute_small_sweep():
    for n in range(6, 200, 2):
        for x in range(3, n - 2, 2):
            pc = classify_pair(n, x)
            expected = brute.smallest_witness(n, x)
            assert pc.assigned_prime == expected
            assert (pc.kind == PRIME_PAIR) == (expected is None)


@given(even_n, st.data())
def test_classify_symmetry(n, data):
    x = data.draw(st.integers(min_value=1, max_value=(n - 4) // 2).map(lambda k: 2 * k + 1))
    a = classify_pair(n, x)
    b = classify_pair(n, n - x)
    assert a.kind == b.kind
    assert a.assigned_prime == b.assigned_prime


@given(even_n)
def test_ordered_unordered_relation(n):
    from goldbach_lab.sieve import is_prime

    ordered = prime_pair_count(n, ORDERED)
    unordered = prime_pair_count(n, UNORDERED)
    diagonal = 1 if (n // 2 >= 3 and is_prime(n // 2)) else 0
    assert ordered == 2 * unordered - diagonal


@given(even_n)
@settings(max_examples=60)
def test_witness_bound(n):
    b = breakdown(n)
    if n >= 10:
        bound = sieve_bound(n)
        assert all(p <= bound for p, _ in b.rows)
        assert b.rows and [p for p, _ in b.rows] == sorted(p for p, _ in b.rows)
    assert b.total + prime_pair_count(n) == total_odd_pairs(n)


@given(st.integers(min_value=10, max_value=1200).map(lambda k: 2 * k + 12), st.sampled_from([3, 5, 7, 11]))
@settings(max_examples=60)
def test_divisible_sides_balance(n, p):
    # for p not dividing n, x-side and y-side multiples pair up disjointly
    if n % p == 0:
        return
    side = sum(1 for x in range(3, n - 2, 2) if x % p == 0 and x != p)
    assert divisible_pair_count(n, p) == 2 * side
    assert divisible_pair_count(n, p) == brute.divisible_count(n, p)
