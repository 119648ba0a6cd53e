"""Watson's two-sample U² statistic and its limiting law.

The limit law is ``U² = sum_k (Z_k^2 + Z'_k^2) / (4 pi^2 k^2)`` for independent
standard normals; it is evaluated here only through its tail series
``P[U² > x] = 2 sum_{m>=1} (-1)^(m-1) exp(-2 m^2 pi^2 x)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .anderson import size_from_word
from .words import BallotWord, letter_counts, pattern_counts

LIMIT_MEAN = Fraction(1, 12)
LIMIT_VARIANCE = Fraction(1, 360)
MAX_TERMS = 100_000
SMALL_X = 0.05


def persson_u2(w: str) -> Fraction:
    """Exact two-sample U² of the circular word `w` (S = first sample)."""
    s, t = letter_counts(w)
    if s == 0 or t == 0:
        raise ValueError(f"both samples must be non-empty, got #S={s}, #T={t}")
    c = pattern_counts(w).crossings
    scaled = Fraction(s * t * (s * t + 2), 24) - Fraction(c, 2)
    return scaled * 2 / (s * t * (s + t))


def size_u2_bridge(w: BallotWord) -> tuple[int, Fraction, Fraction]:
    """Core size, U², and ``size - (st(s+t)/2 * U² - ((s+t)^2 - 1)/24)``, which is 0."""
    s, t = w.s, w.t
    size = size_from_word(w)
    u2 = persson_u2(w.word)
    residual = size - (Fraction(s * t * (s + t), 2) * u2 - Fraction((s + t) ** 2 - 1, 24))
    return size, u2, residual


@dataclass(frozen=True)
class U2Limit:
    """Tail and CDF of the limiting U² law.

    For ``x >= SMALL_X`` the alternating tail series is summed until the next
    term falls below `tolerance` times the leading one; that term bounds the
    truncation error.  Closer to 0 the series needs ever more nearly-cancelling
    terms, so the CDF is taken from the Jacobi-transformed series instead,
    ``sqrt(1/(2 pi x)) * sum_k exp(-(k + 1/2)^2 / (2x))``, which converges
    within a few terms there.
    """

    tolerance: float = 1e-12

    def __post_init__(self):
        if not 0 < self.tolerance <= 1e-6:
            raise ValueError(f"tolerance must lie in (0, 1e-6], got {self.tolerance}")

    def series_tail(self, x: float) -> float:
        """The alternating tail series, capped at MAX_TERMS terms."""
        if x <= 0:
            return 1.0
        first = 2 * math.exp(-2 * math.pi**2 * x)
        total = 0.0
        for m in range(1, MAX_TERMS + 1):
            term = 2 * math.exp(-2 * m * m * math.pi**2 * x)
            if m > 1 and term < self.tolerance * first:
                break
            total += term if m % 2 else -term
        return min(1.0, max(0.0, total))

    def dual_cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        total = 0.0
        for k in range(MAX_TERMS):
            term = math.exp(-((k + 0.5) ** 2) / (2 * x))
            total += 2 * term
            if term < self.tolerance * 1e-6:
                break
        return min(1.0, total / math.sqrt(2 * math.pi * x))

    def tail(self, x: float) -> float:
        if x <= 0:
            return 1.0
        if x < SMALL_X:
            return 1.0 - self.dual_cdf(x)
        return self.series_tail(x)

    def cdf(self, x: float) -> float:
        if x <= 0:
            return 0.0
        if x < SMALL_X:
            return self.dual_cdf(x)
        return 1.0 - self.series_tail(x)

    def quantile(self, p: float, tol: float = 1e-13) -> float:
        """x with ``cdf(x) = p``, by bisection."""
        if not 0 < p < 1:
            raise ValueError("p must lie strictly between 0 and 1")
        lo, hi = 0.0, 1.0
        while self.cdf(hi) < p:
            hi *= 2
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if self.cdf(mid) < p:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2

    def table(self, xs: Sequence[float]) -> list[tuple[float, float, float]]:
        return [(x, self.tail(x), self.cdf(x)) for x in xs]


_DEFAULT = U2Limit()


def u2_tail(x: float) -> float:
    return _DEFAULT.tail(x)


def u2_cdf(x: float) -> float:
    return _DEFAULT.cdf(x)


def u2_quantile(p: float) -> float:
    return _DEFAULT.quantile(p)


@dataclass(frozen=True)
class EcdfComparison:
    ks_distance: float
    sample_size: int


def ks_against_limit(samples: Sequence[float], limit: U2Limit = _DEFAULT) -> EcdfComparison:
    """Sup distance between the empirical CDF of `samples` and the U² CDF.

    Both one-sided gaps are taken at the sorted sample points; ties are
    handled correctly because the largest index of a tie gives the upper gap
    and the smallest index gives the lower one.
    """
    x = np.sort(np.asarray(samples, dtype=float))
    n = len(x)
    if n == 0:
        raise ValueError("need at least one sample")
    uniq, first = np.unique(x, return_index=True)
    f = np.array([limit.cdf(v) for v in uniq])
    f = np.repeat(f, np.diff(np.append(first, n)))
    i = np.arange(1, n + 1)
    d = max(np.max(i / n - f), np.max(f - (i - 1) / n))
    return EcdfComparison(float(min(1.0, max(0.0, d))), n)
