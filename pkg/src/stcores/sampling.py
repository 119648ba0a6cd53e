"""Uniform random (s, t)-cores and Monte Carlo estimates of the size law.

Two routes exist and they differ on purpose:

* :func:`sample_core_size` applies the size formula to a uniformly random
  arrangement of s S's and t T's *without* rotating it to a ballot word.
  ``#STST + #TSTS`` is invariant under cyclic rotation and each rotation class
  holds exactly one ballot word, so the law is the same and the rotation is
  wasted work.
* :func:`sample_core_partition` needs the actual partition, so it rotates to
  the ballot representative and runs the bijection (``O(st)``).
"""
from __future__ import annotations

import struct
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import BinaryIO, NamedTuple, TextIO

import numpy as np

from .anderson import max_core_size, word_to_partition
from .partitions import Partition
from .words import S, T, pattern_counts, require_coprime, rotate_to_ballot

CHUNK = 8192
INT64_SAFE = 2**62
BINARY_MAGIC = b"CORE"
BINARY_VERSION = 1
_HEADER = struct.Struct("<4sHHHxxI")


def make_rng(seed: int) -> np.random.Generator:
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def sample_uniform_word(s: int, t: int, rng: np.random.Generator) -> str:
    require_coprime(s, t)
    where = rng.choice(s + t, size=s, replace=False)
    letters = [T] * (s + t)
    for i in where:
        letters[i] = S
    return "".join(letters)


def sample_core_size(s: int, t: int, rng: np.random.Generator) -> int:
    w = sample_uniform_word(s, t, rng)
    c = pattern_counts(w).crossings
    if c % 2:
        raise ArithmeticError(f"odd crossing count {c} for {w!r}")
    return max_core_size(s, t) - c // 2


def sample_core_partition(s: int, t: int, rng: np.random.Generator) -> Partition:
    w = sample_uniform_word(s, t, rng)
    ballot, _ = rotate_to_ballot(w, s, t)
    return word_to_partition(ballot)


def crossings_batch(is_s: np.ndarray) -> np.ndarray:
    """``#STST + #TSTS`` for every row of a boolean matrix (True = S).

    Runs the single-pass pattern DP column by column across all rows.  int64
    is used only when ``C(length, 4)`` stays below 2**62; longer words fall
    back to exact Python integers.
    """
    n, length = is_s.shape
    dtype = np.int64 if comb(length, 4) < INT64_SAFE else object
    z = lambda: np.zeros(n, dtype=dtype)  # noqa: E731
    ns, nt, st, ts, sts, tst, stst, tsts = (z() for _ in range(8))
    for j in range(length):
        m = is_s[:, j].astype(dtype)
        u = 1 - m
        tsts += tst * m
        sts += st * m
        ts += nt * m
        ns += m
        stst += sts * u
        tst += ts * u
        st += ns * u
        nt += u
    return stst + tsts


def sizes_batch(s: int, t: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """`n` core sizes from uniform (unrotated) words, generated in fixed chunks."""
    require_coprime(s, t)
    top = max_core_size(s, t)
    base = np.zeros(s + t, dtype=bool)
    base[:s] = True
    out = []
    for start in range(0, n, CHUNK):
        rows = min(CHUNK, n - start)
        mat = rng.permuted(np.tile(base, (rows, 1)), axis=1)
        c = crossings_batch(mat)
        if np.any(c % 2):
            raise ArithmeticError("odd crossing count in batch")
        out.append(top - c // 2)
    if not out:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(out)


@dataclass(frozen=True)
class SampleConfig:
    s: int
    t: int
    n: int
    seed: int

    def __post_init__(self):
        require_coprime(self.s, self.t)
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        make_rng(self.seed)


class NormalizedSample(NamedTuple):
    raw_size: int
    normalized: float


def normalizer(s: int, t: int) -> int:
    """``s*t*(s+t)/2``, always an integer because one of s, t, s+t is even."""
    return s * t * (s + t) // 2


def shard_sizes(n: int, shard_count: int) -> list[int]:
    q, r = divmod(n, shard_count)
    return [q + (i < r) for i in range(shard_count)]


def _run_shard(args) -> np.ndarray:
    s, t, n, seed_seq = args
    return sizes_batch(s, t, n, np.random.Generator(np.random.PCG64(seed_seq)))


def monte_carlo_sizes(cfg: SampleConfig, shard_count: int = 1, workers: int | None = None) -> np.ndarray:
    """Raw core sizes for `cfg`.

    Shard i draws from the i-th child of ``SeedSequence(cfg.seed)``, so the
    output depends on (seed, n, shard_count) and never on `workers`.
    """
    if shard_count < 1:
        raise ValueError("shard_count must be positive")
    children = np.random.SeedSequence(cfg.seed).spawn(shard_count)
    jobs = [(cfg.s, cfg.t, k, ss) for k, ss in zip(shard_sizes(cfg.n, shard_count), children)]
    if workers and workers > 1 and shard_count > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_shard, jobs))
    else:
        parts = [_run_shard(j) for j in jobs]
    return np.concatenate(parts)


def monte_carlo_normalized(
    cfg: SampleConfig, shard_count: int = 1, workers: int | None = None
) -> list[NormalizedSample]:
    sizes = monte_carlo_sizes(cfg, shard_count, workers)
    norm = normalizer(cfg.s, cfg.t)
    return [NormalizedSample(int(x), int(x) / norm) for x in sizes]


def u2_from_size(size, s: int, t: int) -> float:
    """Watson's two-sample U² of the word behind a core of the given size."""
    shift = ((s + t) ** 2 - 1) / 24
    return (size + shift) / normalizer(s, t)


EMIT_COLUMNS = {
    "all": ("raw_size", "normalized"),
    "sizes": ("raw_size",),
    "normalized": ("normalized",),
    "u2": ("u2",),
}


def write_samples_csv(out: TextIO, sizes, s: int, t: int, emit: str = "all") -> None:
    cols = EMIT_COLUMNS[emit]
    norm = normalizer(s, t)
    out.write(",".join(("index",) + cols) + "\n")
    for i, x in enumerate(sizes):
        x = int(x)
        vals = {"raw_size": str(x), "normalized": repr(x / norm), "u2": repr(u2_from_size(x, s, t))}
        out.write(",".join([str(i)] + [vals[c] for c in cols]) + "\n")


def write_samples_binary(out: BinaryIO, sizes, s: int, t: int) -> None:
    """16-byte header (magic, version, s, t, n) then little-endian int64 sizes."""
    if max(s, t) > 0xFFFF:
        raise ValueError("binary stream stores s and t as 16-bit fields")
    arr = np.asarray(sizes, dtype="<i8")
    out.write(_HEADER.pack(BINARY_MAGIC, BINARY_VERSION, s, t, len(arr)))
    out.write(arr.tobytes())


def read_samples_binary(data: bytes) -> tuple[int, int, np.ndarray]:
    magic, version, s, t, n = _HEADER.unpack_from(data)
    if magic != BINARY_MAGIC or version != BINARY_VERSION:
        raise ValueError(f"not a version-{BINARY_VERSION} CORE stream")
    arr = np.frombuffer(data, dtype="<i8", offset=_HEADER.size, count=n)
    return s, t, arr
