"""Words over {S, T}: ballot condition, prefix heights, subsequence counts, rotation.

Words are plain ``str`` values over the letters ``"S"`` and ``"T"``.  The path
convention is fixed everywhere in the package: an ``S`` step adds ``t`` to the
height and a ``T`` step subtracts ``s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

S = "S"
T = "T"
LETTERS = (S, T)


class WordError(ValueError):
    """Raised for malformed words or letter counts that break a contract."""


def check_word(w: str) -> str:
    if not isinstance(w, str):
        raise WordError(f"word must be a str, got {type(w).__name__}")
    bad = set(w) - set(LETTERS)
    if bad:
        raise WordError(f"word contains letters outside {{S, T}}: {sorted(bad)}")
    return w


def letter_counts(w: str) -> tuple[int, int]:
    """Return ``(#S, #T)``."""
    check_word(w)
    ns = w.count(S)
    return ns, len(w) - ns


def require_coprime(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ValueError(f"s and t must be positive, got ({s}, {t})")
    if gcd(s, t) != 1:
        raise ValueError(f"s and t must be coprime, but gcd({s}, {t}) = {gcd(s, t)}")


def _require_counts(w: str, s: int, t: int) -> None:
    ns, nt = letter_counts(w)
    if (ns, nt) != (s, t):
        raise WordError(f"word has #S={ns}, #T={nt} but (s, t) = ({s}, {t})")


def prefix_heights(w: str, s: int, t: int) -> list[int]:
    """Heights of the lattice path of `w`, starting at 0.

    >>> prefix_heights("SSTTT", 2, 3)
    [0, 3, 6, 4, 2, 0]
    """
    check_word(w)
    h = 0
    out = [0]
    for c in w:
        h += t if c == S else -s
        out.append(h)
    return out


def is_ballot(w: str, s: int, t: int) -> bool:
    """True iff every prefix of `w` has ``#S*t - #T*s >= 0``.

    The letter counts of `w` must equal ``(s, t)``; a mismatch raises
    :class:`WordError` rather than returning False.
    """
    _require_counts(w, s, t)
    return min(prefix_heights(w, s, t)) >= 0


@dataclass(frozen=True)
class BallotWord:
    """An s/t ballot word with coprime letter counts."""

    word: str
    s: int
    t: int

    def __post_init__(self):
        require_coprime(self.s, self.t)
        if not is_ballot(self.word, self.s, self.t):
            raise WordError(f"{self.word!r} is not {self.s}/{self.t} ballot")

    @classmethod
    def from_word(cls, w: str) -> BallotWord:
        s, t = letter_counts(w)
        return cls(w, s, t)

    def __str__(self):
        return self.word

    def __len__(self):
        return len(self.word)


class PatternCounts(NamedTuple):
    st: int
    ts: int
    stst: int
    tsts: int

    @property
    def crossings(self) -> int:
        """``#STST + #TSTS``, the statistic shared by the size and U² formulas."""
        return self.stst + self.tsts


def count_subsequence(w: str, pattern: str) -> int:
    """Number of index-increasing embeddings of `pattern` into `w`.

    Standard prefix DP in ``O(len(w) * len(pattern))``; ``ways[k]`` counts
    embeddings of ``pattern[:k]`` into the prefix read so far.

    >>> count_subsequence("STSS", "TS")
    2
    """
    check_word(w)
    check_word(pattern)
    if not pattern:
        raise WordError("pattern must be non-empty")
    m = len(pattern)
    ways = [1] + [0] * m
    for c in w:
        for k in range(m, 0, -1):
            if pattern[k - 1] == c:
                ways[k] += ways[k - 1]
    return ways[m]


def pattern_counts(w: str) -> PatternCounts:
    """#ST, #TS, #STST and #TSTS of `w` in a single pass.

    Python integers are unbounded, so no accumulator can wrap.
    """
    check_word(w)
    ns = nt = st = ts = sts = tst = stst = tsts = 0
    for c in w:
        if c == S:
            tsts += tst
            sts += st
            ts += nt
            ns += 1
        else:
            stst += sts
            tst += ts
            st += ns
            nt += 1
    return PatternCounts(st, ts, stst, tsts)


def rotate(w: str, k: int) -> str:
    """Cyclic rotation that starts `w` at index `k`."""
    k %= max(len(w), 1)
    return w[k:] + w[:k]


def rotate_to_ballot(w: str, s: int, t: int) -> tuple[BallotWord, int]:
    """Return the unique ballot rotation of `w` and its offset (cycle lemma).

    The path of `w` attains its minimum at exactly one vertex when
    ``gcd(s, t) = 1``; starting the word right after that vertex gives the
    ballot rotation.  A tied minimum means the counts were not coprime.
    """
    require_coprime(s, t)
    _require_counts(w, s, t)
    heights = prefix_heights(w, s, t)[:-1]
    low = min(heights)
    where = [i for i, h in enumerate(heights) if h == low]
    if len(where) != 1:
        raise WordError(f"path minimum is attained {len(where)} times; counts not coprime")
    k = where[0]
    return BallotWord(rotate(w, k), s, t), k
