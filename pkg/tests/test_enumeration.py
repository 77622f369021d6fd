import itertools
import math
from fractions import Fraction

import pytest

from wmat.enumeration import (
    compositions,
    count_dn,
    count_dnk,
    count_dnk_plus,
    count_dnk_zero,
    count_in,
    count_in_compositions,
    egf_coefficients,
    generate_irreducible,
    generate_packed,
    generate_packed_upto,
    generate_packed_with_sup,
    stirling2,
)
from wmat.words import is_packed, sort_key, star


def set_partitions_count(n, k):
    """Oracle: count partitions of an n-set into k blocks via restricted growth strings."""
    count = 0
    for labels in itertools.product(range(k), repeat=n):
        first_seen = []
        for x in labels:
            if x not in first_seen:
                first_seen.append(x)
        if first_seen == list(range(k)):
            count += 1
    return count


def packed_by_position_sets(n, k):
    """Oracle: build words from position sets [S_0, S_1, ..., S_k] with S_1..S_k non-empty."""
    out = set()
    for labels in itertools.product(range(k + 1), repeat=n):
        if set(range(1, k + 1)) <= set(labels):
            out.add(labels)
    return out


def brute_packed(n):
    return {w for w in itertools.product(range(n + 1), repeat=n) if is_packed(w)}


def test_stirling_examples():
    assert stirling2(4, 2) == 7 == set_partitions_count(4, 2)
    assert all(stirling2(n, n) == 1 for n in range(10))
    assert stirling2(3, 0) == 0
    assert stirling2(0, 0) == 1
    assert stirling2(2, 5) == 0


def test_stirling_against_brute_force():
    for n in range(7):
        for k in range(n + 1):
            assert stirling2(n, k) == set_partitions_count(n, k)


def test_stirling_rejects_negative():
    with pytest.raises(ValueError):
        stirling2(-1, 0)


def test_count_dnk_examples():
    assert count_dnk(4, 2) == 50
    assert count_dnk(7, 5) == 31920
    for n in range(8):
        assert count_dnk(n, n) == math.factorial(n)
    assert sum(1 for w in generate_packed_with_sup(4, 4) if sorted(w) == [1, 2, 3, 4]) == 24


def test_dnk_split_into_zero_free_and_zero_containing():
    for n in range(11):
        for k in range(n + 1):
            assert count_dnk(n, k) == count_dnk_plus(n, k) + count_dnk_zero(n, k)
    for n in range(6):
        for k in range(n + 1):
            words = list(generate_packed_with_sup(n, k))
            assert sum(0 not in w for w in words) == count_dnk_plus(n, k)
            assert sum(0 in w for w in words) == count_dnk_zero(n, k)


def test_count_dn_examples():
    assert count_dn(3) == 26
    assert count_dn(10) == 204495126
    assert count_dn(0) == 1


def test_dn_is_twice_ordered_bell():
    fubini = [sum(stirling2(n, k) * math.factorial(k) for k in range(n + 1)) for n in range(15)]
    assert all(count_dn(n) == 2 * fubini[n] for n in range(1, 15))


def test_count_in_examples():
    assert count_in(4) == 66
    assert count_in(10) == 145992338
    assert count_in(1) == 2
    assert count_in(0) == 1


def test_count_in_seventh_term():
    # Both count forms and direct filtering give 56906; the published table
    # prints 59906, but its own i_8 = 704226 only follows from 56906.
    assert count_in(7) == 56906 == count_in_compositions(7)
    d = [count_dn(j) for j in range(9)]
    i = [count_in(j) for j in range(8)]
    assert d[8] - sum(i[m] * d[8 - m] for m in range(1, 8)) == 704226


def test_in_two_forms_agree():
    for n in range(21):
        assert count_in(n) == count_in_compositions(n)


def test_compositions():
    assert list(compositions(0)) == [()]
    assert sorted(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert sum(1 for _ in compositions(8)) == 2**7


def test_generate_packed_examples():
    assert list(generate_packed(2)) == [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1)]
    assert set(generate_packed(2)) == brute_packed(2)
    assert list(generate_packed_with_sup(2, 1)) == [(0, 1), (1, 0), (1, 1)]
    assert list(generate_packed(0)) == [()]
    assert list(generate_packed_with_sup(2, 3)) == []


def test_generate_against_brute_force():
    for n in range(6):
        words = list(generate_packed(n))
        assert set(words) == brute_packed(n)
        assert len(words) == len(set(words)) == count_dn(n)
        assert words == sorted(words, key=sort_key)
        for k in range(n + 1):
            with_sup = list(generate_packed_with_sup(n, k))
            assert set(with_sup) == packed_by_position_sets(n, k)
            assert len(with_sup) == count_dnk(n, k)
            assert with_sup == sorted(with_sup)


def test_generation_matches_formula_up_to_6():
    for n in range(7):
        for k in range(n + 1):
            assert sum(1 for _ in generate_packed_with_sup(n, k)) == count_dnk(n, k)


def test_generate_irreducible_examples():
    assert list(generate_irreducible(2)) == [(1, 1), (2, 1)]
    assert list(generate_irreducible(1)) == [(0,), (1,)]
    assert len(list(generate_irreducible(3))) == 10
    with pytest.raises(ValueError):
        list(generate_irreducible(0))


def test_irreducible_counts_match_filter():
    for n in range(1, 7):
        assert sum(1 for _ in generate_irreducible(n)) == count_in(n)


def test_egf_examples():
    c = egf_coefficients(4)
    assert c[0] == 1
    assert c[1] == 2
    assert c[4] == Fraction(150, 24)


def test_egf_matches_dn():
    c = egf_coefficients(12)
    for n in range(13):
        assert c[n] * math.factorial(n) == count_dn(n)


def test_star_closed_on_generated_words():
    words = list(generate_packed_upto(3))
    for u in words:
        for v in words:
            assert is_packed(star(u, v))
