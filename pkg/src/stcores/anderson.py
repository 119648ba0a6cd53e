"""Anderson's bijection: ballot words <-> downsets <-> (s, t)-core partitions.

A ballot word traces a closed lattice path (S: +t, T: -s) through 0.  The
elements that sit immediately above the downset are exactly the path
vertices, so the downset is everything not reachable from a vertex by adding
s's and t's.
"""
from __future__ import annotations

from .partitions import (
    Downset,
    Partition,
    first_column_hooks,
    hook_lengths,
    partition_from_hookset,
    size_from_hookset,
)
from .words import BallotWord, S, T, WordError, pattern_counts, prefix_heights


def max_core_size(s: int, t: int) -> int:
    """Size of the largest (s, t)-core, ``(s^2-1)(t^2-1)/24``."""
    num = (s * s - 1) * (t * t - 1)
    if num % 24:
        raise ArithmeticError(f"(s^2-1)(t^2-1) = {num} not divisible by 24 for ({s}, {t})")
    return num // 24


def word_to_downset(w: BallotWord) -> Downset:
    s, t = w.s, w.t
    n = s * t
    reach = bytearray(n + 1)
    for h in prefix_heights(w.word, s, t):
        reach[h] = 1
    for k in range(n + 1):
        if not reach[k] and ((k >= s and reach[k - s]) or (k >= t and reach[k - t])):
            reach[k] = 1
    return Downset(frozenset(k for k in range(1, n + 1) if not reach[k]), s, t)


def downset_to_word(a: Downset) -> BallotWord:
    """Walk the path greedily: step down (T) whenever the landing is a legal non-member."""
    s, t = a.s, a.t
    c = 0
    out = []
    for _ in range(s + t):
        if c - s >= 0 and c - s not in a:
            out.append(T)
            c -= s
        else:
            out.append(S)
            c += t
    word = "".join(out)
    if c != 0 or word.count(S) != s:
        raise WordError(f"greedy walk from {sorted(a)} did not close at 0 for ({s}, {t})")
    return BallotWord(word, s, t)


def word_to_partition(w: BallotWord) -> Partition:
    return partition_from_hookset(word_to_downset(w).elements)


def core_violation(p: Partition, s: int, t: int) -> int | None:
    """First hook length in `p` equal to `s` or `t`, else None."""
    for row in hook_lengths(p):
        for h in row:
            if h == s or h == t:
                return h
    return None


def partition_to_word(p: Partition, s: int, t: int) -> BallotWord:
    bad = core_violation(p, s, t)
    if bad is not None:
        raise ValueError(f"partition {str(p)!r} is not an ({s}, {t})-core: it has a hook of length {bad}")
    return downset_to_word(Downset(first_column_hooks(p), s, t))


def size_from_word(w: BallotWord) -> int:
    """Size of the core for `w`: max size minus half of ``#STST + #TSTS``."""
    c = pattern_counts(w.word).crossings
    if c % 2:
        raise ArithmeticError(f"#STST + #TSTS = {c} is odd for {w.word!r}")
    return max_core_size(w.s, w.t) - c // 2


def ts_count_identity_check(w: BallotWord) -> tuple[int, int]:
    """``((s-1)(t-1)/2 - #TS(w), |downset(w)|)``; the two always agree."""
    predicted = (w.s - 1) * (w.t - 1) // 2 - pattern_counts(w.word).ts
    return predicted, len(word_to_downset(w))


def swap_chain(w: BallotWord) -> list[BallotWord]:
    """Words from `w` to ``S^s T^t`` by repeated ``TS -> ST`` swaps (leftmost first).

    Each swap adds one element to the downset; only used as a tiny-scale
    cross-check of the incremental size update.
    """
    chain = [w]
    word = w.word
    while (i := word.find(T + S)) >= 0:
        word = word[:i] + S + T + word[i + 2:]
        chain.append(BallotWord(word, w.s, w.t))
    return chain


def core_size(w: BallotWord) -> int:
    """Box count via the downset, independent of pattern counts."""
    return size_from_hookset(word_to_downset(w).elements)
