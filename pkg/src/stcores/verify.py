"""Cross-check battery: brute force vs bijection vs size formula vs U² bridge."""
from __future__ import annotations

from collections import Counter
from math import gcd
from typing import TextIO

from .anderson import (
    core_violation,
    downset_to_word,
    size_from_word,
    ts_count_identity_check,
    word_to_downset,
    word_to_partition,
)
from .enumeration import brute_force_cores, enumerate_ballot_words, rational_catalan
from .partitions import first_column_hooks
from .watson import size_u2_bridge


def coprime_pairs(max_sum: int):
    """Coprime (s, t) with 1 <= s < t and s + t <= max_sum."""
    for total in range(3, max_sum + 1):
        for s in range(1, (total + 1) // 2):
            t = total - s
            if gcd(s, t) == 1:
                yield s, t


def check_pair(s: int, t: int) -> list[tuple[str, bool, str]]:
    """Run every check for one pair; each result is (name, passed, detail)."""
    results = []
    words = list(enumerate_ballot_words(s, t))
    cores = brute_force_cores(s, t)
    cat = rational_catalan(s, t)
    results.append(
        ("count", len(words) == cat == len(cores), f"words={len(words)} catalan={cat} brute={len(cores)}")
    )

    def first_bad(pred, label):
        for w in words:
            msg = pred(w)
            if msg:
                return (label, False, f"counterexample {w.word}: {msg}")
        return (label, True, f"{len(words)} words")

    def roundtrip(w):
        back = downset_to_word(word_to_downset(w))
        return None if back == w else f"round trip gave {back.word}"

    def size_formula(w):
        p = word_to_partition(w)
        got = size_from_word(w)
        return None if got == p.size else f"formula {got} != box count {p.size} of [{p}]"

    def is_core(w):
        p = word_to_partition(w)
        bad = core_violation(p, s, t)
        if bad is not None:
            return f"[{p}] has hook {bad}"
        if first_column_hooks(p) != word_to_downset(w).elements:
            return "hook set mismatch"
        return None

    def ts_identity(w):
        pred, actual = ts_count_identity_check(w)
        return None if pred == actual else f"predicted |A|={pred}, actual {actual}"

    def bridge(w):
        _, _, res = size_u2_bridge(w)
        return None if res == 0 else f"residual {res}"

    results.append(first_bad(roundtrip, "bijection"))
    results.append(first_bad(size_formula, "size-formula"))
    results.append(first_bad(is_core, "core"))
    results.append(first_bad(ts_identity, "hookset-count"))
    results.append(first_bad(bridge, "u2-bridge"))

    via_words = Counter(size_from_word(w) for w in words)
    via_brute = Counter(p.size for p in cores)
    results.append(("distribution", via_words == via_brute, f"{len(via_words)} distinct sizes"))
    return results


def run(max_sum: int, out: TextIO) -> bool:
    for s, t in coprime_pairs(max_sum):
        for name, passed, detail in check_pair(s, t):
            out.write(f"({s},{t}) {name}: {'PASS' if passed else 'FAIL'} {detail}\n")
            if not passed:
                out.write(f"first failure at ({s},{t}) {name}\n")
                return False
    out.write("all checks passed\n")
    return True
