from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import GOLDEN_DOWNSET, coprime_pairs
from stcores.anderson import max_core_size
from stcores.partitions import (
    Downset,
    Partition,
    first_column_hooks,
    format_hookset,
    gaps,
    hook_lengths,
    is_downset,
    is_p_core,
    parse_hookset,
    partition_from_hookset,
    partitions_of,
    size_from_hookset,
)

GOLDEN_PARTITION = Partition((6, 6, 5, 2, 2, 1, 1))


def brute_hook(rows, i, j):
    """Count boxes right of and below (i, j) directly from the diagram."""
    cells = {(a, b) for a, r in enumerate(rows) for b in range(r)}
    right = sum(1 for b in range(j + 1, rows[i]) if (i, b) in cells)
    below = sum(1 for a in range(i + 1, len(rows)) if (a, j) in cells)
    return right + below + 1


def small_partitions(max_rows=8, max_part=8):
    def rec(rows, cap):
        yield Partition(tuple(rows))
        if len(rows) < max_rows:
            for r in range(1, cap + 1):
                yield from rec(rows + [r], r)

    yield from rec([], max_part)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition().size == 0


def test_serialization_round_trip():
    p = Partition((6, 5, 3))
    assert str(p) == "6 5 3"
    assert Partition.parse("6 5 3") == p
    assert str(Partition()) == ""
    assert Partition.parse("") == Partition()
    assert format_hookset({8, 3, 6}) == "3,6,8"
    assert parse_hookset("3,6,8") == {3, 6, 8}
    assert parse_hookset("") == frozenset()


def test_hook_lengths_examples():
    assert hook_lengths(Partition((6, 5, 3)))[0][2] == 6
    assert hook_lengths(Partition((1,))) == [[1]]
    assert hook_lengths(Partition((2, 1))) == [[3, 1], [1]]
    assert hook_lengths(Partition((3, 1, 1))) == [[5, 2, 1], [2], [1]]


@pytest.mark.parametrize("n", range(0, 13))
def test_hook_lengths_match_diagram_count(n):
    for p in partitions_of(n):
        h = hook_lengths(p)
        for i, j in p.boxes():
            assert h[i][j] == brute_hook(p.rows, i, j)


def test_is_p_core_examples():
    assert is_p_core(Partition(), 5)
    assert not is_p_core(Partition((1,)), 1)
    p = Partition((3, 1, 1))
    assert is_p_core(p, 3) and is_p_core(p, 4)


def test_first_column_hooks_examples():
    assert first_column_hooks(Partition((6, 5, 3))) == {8, 6, 3}
    assert first_column_hooks(Partition()) == frozenset()
    assert first_column_hooks(GOLDEN_PARTITION) == GOLDEN_DOWNSET
    p = Partition((6, 5, 3))
    assert first_column_hooks(p) == {row[0] for row in hook_lengths(p)}


def test_partition_from_hookset_examples():
    assert partition_from_hookset({8, 6, 3}) == Partition((6, 5, 3))
    assert partition_from_hookset(set()) == Partition()
    p = partition_from_hookset(GOLDEN_DOWNSET)
    assert len(p) == 7 and p.size == 23


def test_size_from_hookset_examples():
    assert size_from_hookset({8, 6, 3}) == 14 == Partition((6, 5, 3)).size
    assert size_from_hookset(set()) == 0
    assert size_from_hookset(GOLDEN_DOWNSET) == 23


def test_round_trip_exhaustive():
    count = 0
    for p in small_partitions():
        assert partition_from_hookset(first_column_hooks(p)) == p
        count += 1
    assert count == 12870  # C(16, 8) partitions fit in an 8x8 box


@pytest.mark.parametrize("k", range(0, 7))
def test_size_from_hookset_exhaustive_small(k):
    for a in combinations(range(1, 16), k):
        assert size_from_hookset(a) == partition_from_hookset(a).size


@given(st.sets(st.integers(1, 30), max_size=6))
def test_size_from_hookset_random(a):
    assert size_from_hookset(a) == partition_from_hookset(a).size


def test_is_downset_examples():
    assert is_downset(GOLDEN_DOWNSET, 7, 10)
    assert not is_downset({10}, 7, 10)
    assert is_downset({1, 2, 5}, 3, 4)
    assert gaps(3, 4) == [1, 2, 5]
    with pytest.raises(ValueError):
        is_downset({1}, 2, 4)
    with pytest.raises(ValueError):
        Downset(frozenset({10}), 7, 10)


def brute_representable(n, s, t):
    return any((n - x * s) % t == 0 for x in range(n // s + 1))


@pytest.mark.parametrize("s, t", [p for p in coprime_pairs(12) if p[0] > 1])
def test_downsets_avoid_semigroup(s, t):
    # every subset of the gaps that passes the local rule avoids x*s + y*t
    g = gaps(s, t)
    assert g == [n for n in range(1, s * t) if not brute_representable(n, s, t)]
    if len(g) > 12:
        return
    for mask in product((0, 1), repeat=len(g)):
        a = {x for x, keep in zip(g, mask) if keep}
        if is_downset(a, s, t):
            assert all(not brute_representable(x, s, t) for x in a)
            assert all(x <= s * t - s - t for x in a)


@pytest.mark.parametrize("s, t", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (2, 7), (3, 7)])
def test_core_iff_downset(s, t):
    for n in range(0, 26):
        for p in partitions_of(n):
            both = is_p_core(p, s) and is_p_core(p, t)
            assert both == is_downset(first_column_hooks(p), s, t), (p, s, t)


@pytest.mark.parametrize("s, t", [p for p in coprime_pairs(20) if p[0] > 1] + [(1, 7)])
def test_maximal_downset_olsson_stanton(s, t):
    g = gaps(s, t)
    assert len(g) == (s - 1) * (t - 1) // 2
    assert is_downset(g, s, t)
    p = partition_from_hookset(g)
    assert p.size == max_core_size(s, t) == (s * s - 1) * (t * t - 1) // 24
    assert is_p_core(p, s) and is_p_core(p, t)
