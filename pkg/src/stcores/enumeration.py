"""Exact enumeration of (s, t)-cores, their size distribution and moments."""
from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterator

from .anderson import max_core_size, size_from_word
from .partitions import Partition, hook_lengths
from .words import S, T, BallotWord, require_coprime


def rational_catalan(s: int, t: int) -> int:
    require_coprime(s, t)
    q, r = divmod(comb(s + t, s), s + t)
    assert r == 0
    return q


def enumerate_ballot_words(s: int, t: int, prefix: str = "") -> Iterator[BallotWord]:
    """Every s/t ballot word extending `prefix`, lexicographically with S < T.

    A prefix of nonnegative height can always be completed (all remaining S's,
    then all T's), so pruning on negative height alone is exact.  Passing
    disjoint prefixes shards the enumeration.
    """
    require_coprime(s, t)
    ns = prefix.count(S)
    nt = len(prefix) - ns
    h = 0
    for c in prefix:
        h += t if c == S else -s
        if h < 0:
            return
    if ns > s or nt > t:
        return
    buf = list(prefix)

    def rec(ns, nt, h):
        if ns == s and nt == t:
            yield BallotWord("".join(buf), s, t)
            return
        if ns < s:
            buf.append(S)
            yield from rec(ns + 1, nt, h + t)
            buf.pop()
        if nt < t and h - s >= 0:
            buf.append(T)
            yield from rec(ns, nt + 1, h - s)
            buf.pop()

    yield from rec(ns, nt, h)


@dataclass
class SizeDistribution:
    s: int
    t: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: SizeDistribution) -> SizeDistribution:
        if (self.s, self.t) != (other.s, other.t):
            raise ValueError("cannot merge distributions for different (s, t)")
        c = Counter(self.counts)
        c.update(other.counts)
        return SizeDistribution(self.s, self.t, dict(sorted(c.items())))

    def probabilities(self) -> dict[int, Fraction]:
        n = self.total
        return {k: Fraction(v, n) for k, v in self.counts.items()}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["size", "count"])
        for k in sorted(self.counts):
            w.writerow([k, self.counts[k]])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "s": self.s,
                "t": self.t,
                "total": str(self.total),
                "counts": {str(k): str(self.counts[k]) for k in sorted(self.counts)},
            }
        )

    @classmethod
    def from_json(cls, text: str) -> SizeDistribution:
        d = json.loads(text)
        return cls(d["s"], d["t"], {int(k): int(v) for k, v in d["counts"].items()})


def exact_size_distribution(s: int, t: int, prefixes: tuple[str, ...] = ("",)) -> SizeDistribution:
    dist = SizeDistribution(s, t)
    for p in prefixes:
        hist = Counter(size_from_word(w) for w in enumerate_ballot_words(s, t, p))
        dist = dist.merge(SizeDistribution(s, t, dict(hist)))
    return dist


@dataclass(frozen=True)
class MomentSummary:
    mean: Fraction
    variance: Fraction
    raw: tuple[Fraction, ...] = ()
    central: tuple[Fraction, ...] = ()


def exact_moments(d: SizeDistribution, max_order: int = 2) -> MomentSummary:
    """Raw and central moments of orders 1..max_order as exact rationals."""
    if max_order < 1:
        raise ValueError("max_order must be positive")
    n = d.total
    order = max(max_order, 2)
    raw = tuple(
        Fraction(sum(c * k**r for k, c in d.counts.items()), n) for r in range(1, order + 1)
    )
    mean = raw[0]
    central = tuple(
        Fraction(sum(c * (k - mean) ** r for k, c in d.counts.items()), n)
        for r in range(1, order + 1)
    )
    return MomentSummary(mean, central[1], raw[:max_order], central[:max_order])


def armstrong_mean(s: int, t: int) -> Fraction:
    return Fraction((s + t + 1) * (s - 1) * (t - 1), 24)


def core_size_variance(s: int, t: int) -> Fraction:
    return Fraction((s + t + 1) * (s + t) * s * (s - 1) * t * (t - 1), 1440)


def brute_force_cores(s: int, t: int) -> set[Partition]:
    """All (s, t)-cores found by hook inspection alone, without the bijection.

    Partitions are grown from the bottom row upward.  Adding a row on top never
    changes the hooks of the rows beneath it, and the new row's hooks are
    final, so any hook of length s or t prunes the whole branch: every
    bottom segment of a core is itself a core.  Sizes are bounded by the
    maximal core size.
    """
    require_coprime(s, t)
    bound = max_core_size(s, t)
    found = {Partition()}

    def rec(rows: tuple[int, ...], size: int):
        # rows are stored bottom-up here
        lo = rows[-1] if rows else 1
        for r in range(lo, bound - size + 1):
            cand = Partition(tuple(reversed(rows + (r,))))
            if any(h == s or h == t for h in hook_lengths(cand)[0]):
                continue
            found.add(cand)
            rec(rows + (r,), size + r)

    rec((), 0)
    return found
