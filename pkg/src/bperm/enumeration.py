"""
Closed-form counting formulas and the exhaustive counting engine.

The engine enumerates whole groups of signed permutations and counts
avoiders; work is partitioned over the 2n possible first window entries, so
it can fan out to a process pool and still merge deterministically (the
merge is an integer sum).  An optional on-disk memo keyed by normalized
pattern set, mode, and size caches counts between runs.

All counts are exact arbitrary-precision integers.
"""
from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from math import comb
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from .core import Permutation, SignedPermutation
from .patterns import count_avoiders, word_contains
from .tableaux import domino_count, syt_count

MAX_SIGNED_SIZE = 8
MAX_UNSIGNED_SIZE = 9


class SizeCapExceededError(ValueError):
    """Exhaustive enumeration was requested beyond the supported size."""


def fib_like(k: int, i: int) -> int:
    """
    Order-k recurrent sequence: 1 at index floor(k/2) + 1, 0 at the other
    indices up to k, and the sum of the previous k terms afterwards.
    For k = 2 this is the Fibonacci sequence.
    """
    if k < 1 or i < 1:
        raise ValueError("k and i must be positive")
    values = [0] * (k + 1)  # values[1..k]
    values[k // 2 + 1] = 1
    if i <= k:
        return values[i]
    values = values[1:]
    for _ in range(k + 1, i + 1):
        values.append(sum(values[-k:]))
    return values[-1]


def count_gav_132_and_increasing(n: int, k: int) -> int:
    """
    Number of signed permutations of size n globally avoiding 132 and the
    increasing pattern of size k + 1.
    """
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return fib_like(k, n + k + 1)


def count_gav_132_and_decreasing(n: int, k: int) -> int:
    """
    Number of signed permutations of size n globally avoiding 132 and the
    decreasing pattern of size k + 1.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return sum(comb(n - 1, (j - 1) // 2) for j in range(1, k + 1))


def palindromic_compositions(
    total: int, max_part: int | None = None, max_parts: int | None = None
) -> Iterator[tuple[int, ...]]:
    """
    All compositions of `total` that read the same in both directions,
    optionally bounding the largest part and the number of parts.
    """
    if total < 0:
        raise ValueError("total must be nonnegative")
    part_cap = total if max_part is None else min(max_part, total)
    count_cap = total if max_parts is None else max_parts

    def rec(remaining: int, budget: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if budget >= 1 and remaining <= part_cap:
            yield (remaining,)
        if budget >= 2:
            for outer in range(1, min(part_cap, remaining // 2) + 1):
                for inner in rec(remaining - 2 * outer, budget - 2):
                    yield (outer,) + inner + (outer,)

    return rec(total, count_cap)


def palindromic_composition_count(
    total: int, max_part: int | None = None, max_parts: int | None = None
) -> int:
    return sum(1 for _ in palindromic_compositions(total, max_part, max_parts))


def es_bound(k: int, j: int, signed: bool) -> int:
    """
    Largest size at which permutations can avoid both the increasing pattern
    of size k + 1 and the decreasing pattern of size j + 1: kj for unsigned
    permutations, floor(kj/2) for signed permutations avoiding globally.
    """
    if k < 1 or j < 1:
        raise ValueError("k and j must be positive")
    return (k * j) // 2 if signed else k * j


def es_extremal_count(k: int, j: int, signed: bool) -> int:
    """
    Number of (signed) permutations of the extremal size avoiding both
    monotone patterns: the square of a tableau count of rectangular or
    near-rectangular shape.
    """
    if k < 1 or j < 1:
        raise ValueError("k and j must be positive")
    if not signed:
        return syt_count((k,) * j) ** 2
    if (k * j) % 2 == 0:
        return domino_count((k,) * j) ** 2
    shape = tuple(p for p in (k,) * (j - 1) + (k - 1,) if p > 0)
    return domino_count(shape) ** 2


@dataclass(frozen=True)
class SequenceTable:
    """One exact count per size, with a label and a provenance tag."""

    label: str
    rows: tuple[tuple[int, int], ...]
    provenance: str  # "formula" or "brute-force"

    def counts(self) -> tuple[int, ...]:
        return tuple(count for _, count in self.rows)


def _branch_count(args: tuple) -> int:
    n, pattern_words, mode, first = args
    return count_avoiders(n, pattern_words, mode=mode, first=first)


def _count_exhaustive(
    n: int, pattern_words: tuple[tuple[int, ...], ...], mode: str, jobs: int
) -> int:
    if n == 0:
        return count_avoiders(0, pattern_words, mode=mode)
    firsts = [v for v in range(-n, n + 1) if v != 0]
    tasks = [(n, pattern_words, mode, first) for first in firsts]
    if jobs <= 1:
        return sum(_branch_count(task) for task in tasks)
    with Pool(processes=min(jobs, len(tasks))) as pool:
        return sum(pool.map(_branch_count, tasks))


def normalized_pattern_key(pattern_words: Iterable[Sequence[int]]) -> str:
    return ";".join(
        ",".join(str(v) for v in word)
        for word in sorted(tuple(w) for w in pattern_words)
    )


def load_cache(path: str) -> dict[str, int]:
    """Read a memo file of "patterns|mode|n|count" lines."""
    cache: dict[str, int] = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                patterns, mode, n, count = line.rsplit("|", 3)
                cache[f"{patterns}|{mode}|{n}"] = int(count)
    except FileNotFoundError:
        pass
    return cache


def store_cache(path: str, cache: dict[str, int]) -> None:
    """Rewrite the memo file atomically (temp file + rename)."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".bperm-cache-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            for key in sorted(cache):
                handle.write(f"{key}|{cache[key]}\n")
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def sequence(
    patterns: Iterable[Permutation] | Iterable[SignedPermutation],
    n_range: Iterable[int],
    mode: str = "global",
    jobs: int = 1,
    cache_path: str | None = None,
    label: str | None = None,
) -> SequenceTable:
    """
    Exact avoider counts per size, by exhaustive enumeration.  Unsigned
    patterns go with mode "global", signed ones with mode "classical".  The
    result is independent of `jobs`; sizes above the hard cap are rejected.
    """
    pattern_objects = tuple(patterns)
    pattern_words = tuple(p.oneline if isinstance(p, Permutation) else p.window
                          for p in pattern_objects)
    sizes = sorted(set(n_range))
    if any(n < 0 for n in sizes):
        raise ValueError("sizes must be nonnegative")
    if any(n > MAX_SIGNED_SIZE for n in sizes):
        raise SizeCapExceededError(f"sizes beyond {MAX_SIGNED_SIZE} are not supported")
    key_base = f"{normalized_pattern_key(pattern_words)}|{mode}"
    cache = load_cache(cache_path) if cache_path else {}
    dirty = False
    rows = []
    for n in sizes:
        key = f"{key_base}|{n}"
        if key in cache:
            count = cache[key]
        else:
            count = _count_exhaustive(n, pattern_words, mode, jobs)
            cache[key] = count
            dirty = True
        rows.append((n, count))
    if cache_path and dirty:
        store_cache(cache_path, cache)
    text = label if label is not None else normalized_pattern_key(pattern_words)
    return SequenceTable(label=text, rows=tuple(rows), provenance="brute-force")


def unsigned_avoider_count(n: int, patterns: Iterable[Permutation]) -> int:
    """Number of unsigned permutations of size n avoiding every pattern."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n > MAX_UNSIGNED_SIZE:
        raise SizeCapExceededError(f"sizes beyond {MAX_UNSIGNED_SIZE} are not supported")
    from itertools import permutations as iter_permutations

    words = tuple(p.oneline for p in patterns)
    count = 0
    for word in iter_permutations(range(1, n + 1)):
        if not any(word_contains(word, p) for p in words):
            count += 1
    return count
