from collections import Counter
from fractions import Fraction
from math import comb

import pytest

from conftest import brute_is_ballot, coprime_pairs, words_with_counts
from stcores.anderson import max_core_size
from stcores.enumeration import (
    SizeDistribution,
    armstrong_mean,
    brute_force_cores,
    core_size_variance,
    enumerate_ballot_words,
    exact_moments,
    exact_size_distribution,
    rational_catalan,
)
from stcores.partitions import Partition, is_p_core, partitions_of


def test_rational_catalan_examples():
    assert rational_catalan(2, 3) == 2
    assert rational_catalan(1, 9) == 1
    assert rational_catalan(7, 10) == comb(17, 7) // 17 == 1144
    with pytest.raises(ValueError):
        rational_catalan(4, 6)


def test_rational_catalan_is_exact_beyond_64_bits():
    v = rational_catalan(37, 41)
    assert v * 78 == comb(78, 37)
    assert v > 2**64


def test_enumerate_examples():
    assert [w.word for w in enumerate_ballot_words(2, 3)] == ["SSTTT", "STSTT"]
    assert [w.word for w in enumerate_ballot_words(1, 2)] == ["STT"]
    assert len(list(enumerate_ballot_words(3, 4))) == 5


@pytest.mark.parametrize("s, t", coprime_pairs(13) + [(4, 3), (7, 5)])
def test_enumeration_matches_filtered_words(s, t):
    got = [w.word for w in enumerate_ballot_words(s, t)]
    expected = sorted(w for w in words_with_counts(s, t) if brute_is_ballot(w, s, t))
    assert got == expected  # lexicographic with S < T, no duplicates
    assert len(got) == rational_catalan(s, t)


def test_prefix_sharding_merges_to_the_whole():
    s, t = 5, 8
    whole = exact_size_distribution(s, t)
    prefixes = ("SS", "ST", "TS", "TT")
    assert exact_size_distribution(s, t, prefixes) == whole
    parts = [exact_size_distribution(s, t, (p,)) for p in reversed(prefixes)]
    merged = parts[0]
    for p in parts[1:]:
        merged = merged.merge(p)
    assert merged.counts == whole.counts


def test_exact_size_distribution_examples():
    assert exact_size_distribution(2, 3).counts == {0: 1, 1: 1}
    assert exact_size_distribution(1, 6).counts == {0: 1}
    d = exact_size_distribution(3, 4)
    assert max(d.counts) == 5 and d.counts[5] == 1
    assert d.total == 5


def test_exact_moments_examples():
    m = exact_moments(exact_size_distribution(2, 3))
    assert (m.mean, m.variance) == (Fraction(1, 2), Fraction(1, 4))
    m = exact_moments(exact_size_distribution(1, 5))
    assert (m.mean, m.variance) == (0, 0)
    m = exact_moments(exact_size_distribution(3, 4), 4)
    assert (m.mean, m.variance) == (2, Fraction(14, 5))
    assert len(m.raw) == 4 and m.central[0] == 0
    assert m.raw[1] == m.variance + m.mean**2


def test_moment_formulas_exact():
    for s, t in coprime_pairs(16):
        m = exact_moments(exact_size_distribution(s, t))
        assert m.mean == armstrong_mean(s, t)
        assert m.variance == core_size_variance(s, t)
        assert m.variance >= 0


def brute_force_by_filter(s, t):
    """The literal oracle: every partition up to the maximal size, filtered."""
    return {
        p
        for n in range(max_core_size(s, t) + 1)
        for p in partitions_of(n)
        if is_p_core(p, s) and is_p_core(p, t)
    }


@pytest.mark.parametrize("s, t", [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7), (4, 5), (3, 7)])
def test_pruned_brute_force_equals_literal_filter(s, t):
    assert brute_force_cores(s, t) == brute_force_by_filter(s, t)


def test_brute_force_examples():
    assert brute_force_cores(2, 3) == {Partition(), Partition((1,))}
    assert brute_force_cores(1, 5) == {Partition()}
    cores = brute_force_cores(3, 4)
    assert len(cores) == 5 and Partition((3, 1, 1)) in cores


@pytest.mark.parametrize("s, t", coprime_pairs(14))
def test_brute_force_agrees_with_bijection(s, t):
    cores = brute_force_cores(s, t)
    assert len(cores) == rational_catalan(s, t)
    assert Counter(p.size for p in cores) == Counter(exact_size_distribution(s, t).counts)


def test_serialization():
    d = exact_size_distribution(2, 3)
    assert d.to_csv() == "size,count\n0,1\n1,1\n"
    assert d.to_json() == '{"s": 2, "t": 3, "total": "2", "counts": {"0": "1", "1": "1"}}'
    assert SizeDistribution.from_json(d.to_json()) == d
