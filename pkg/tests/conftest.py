from itertools import combinations
from math import gcd

import pytest

GOLDEN_WORD = "STSTSSTSTTTSSTTTT"
GOLDEN_DOWNSET = frozenset({1, 2, 4, 5, 9, 11, 12})


def brute_count(w, pattern):
    """O(n^k) embedding count, independent of the DP."""
    k = len(pattern)
    return sum(
        1 for idx in combinations(range(len(w)), k) if all(w[i] == c for i, c in zip(idx, pattern))
    )


def words_with_counts(s, t):
    n = s + t
    for pos in combinations(range(n), s):
        letters = ["T"] * n
        for i in pos:
            letters[i] = "S"
        yield "".join(letters)


def brute_is_ballot(w, s, t):
    """Prefix proportion test in its original form: #S/#T >= s/t, cross-multiplied."""
    ns = nt = 0
    for c in w:
        ns += c == "S"
        nt += c == "T"
        if ns * t < nt * s:
            return False
    return True


def coprime_pairs(max_sum, min_s=1):
    return [
        (s, n - s)
        for n in range(2, max_sum + 1)
        for s in range(min_s, n)
        if s <= n - s and gcd(s, n - s) == 1 and n - s >= 1
    ]


@pytest.fixture
def golden_word():
    return GOLDEN_WORD


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
