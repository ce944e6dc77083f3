"""
Pattern containment for signed permutations, and avoidance-class machinery.

Two notions of containment are implemented:

* *classical* containment of a signed pattern q in a signed permutation w:
  an occurrence at positive window positions whose absolute values are
  order-isomorphic to those of q and whose signs match q entrywise;

* *global* containment of an unsigned pattern p in w: an occurrence of p
  anywhere in the 2n-letter mirror word of w.

Global avoidance classes can always be rewritten as classical avoidance
classes: `global_basis` computes, for a set P of unsigned patterns, the
unique minimal antichain of signed patterns whose classical avoidance class
coincides with the global avoidance class of P.

The containment kernels are plain backtracking over words with
remaining-length pruning; they allocate nothing per probe beyond one shared
buffer, which keeps exhaustive enumeration over whole groups affordable.

Pattern-set text grammar (shared with the CLI): patterns separated by ";",
entries by ",", e.g. "3,4,1,2;4,2,3,1" (unsigned) or "-2,1;-1,-2" (signed).
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .core import (
    DihedralSymmetry,
    Permutation,
    SignedPermutation,
    iter_windows,
    mirror_of_window,
    parse_window,
)

MAX_BASIS_PATTERN_SIZE = 8


class PatternTooLargeError(ValueError):
    """A basis computation was requested for patterns above the supported size."""


def word_contains(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of `word` is order-isomorphic to `pattern`."""
    k = len(pattern)
    n = len(word)
    if k == 0:
        return True
    if k > n:
        return False
    chosen = [0] * k

    def extend(depth: int, start: int) -> bool:
        if depth == k:
            return True
        p_new = pattern[depth]
        for i in range(start, n - (k - depth) + 1):
            v = word[i]
            for j in range(depth):
                if (chosen[j] < v) != (pattern[j] < p_new):
                    break
            else:
                chosen[depth] = v
                if extend(depth + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def signed_word_contains(window: Sequence[int], pattern: Sequence[int]) -> bool:
    """
    True iff `window` classically contains the signed pattern `pattern`:
    some subsequence matches it in absolute-value order and in sign.
    """
    k = len(pattern)
    n = len(window)
    if k == 0:
        return True
    if k > n:
        return False
    chosen = [0] * k

    def extend(depth: int, start: int) -> bool:
        if depth == k:
            return True
        p_new = pattern[depth]
        ap_new = abs(p_new)
        for i in range(start, n - (k - depth) + 1):
            v = window[i]
            if (v > 0) != (p_new > 0):
                continue
            av = abs(v)
            for j in range(depth):
                if (abs(chosen[j]) < av) != (abs(pattern[j]) < ap_new):
                    break
            else:
                chosen[depth] = v
                if extend(depth + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def count_word_occurrences(word: Sequence[int], pattern: Sequence[int]) -> int:
    """Number of index subsets of `word` carrying an occurrence of `pattern`."""
    k = len(pattern)
    n = len(word)
    if k == 0:
        return 1
    chosen = [0] * k

    def extend(depth: int, start: int) -> int:
        if depth == k:
            return 1
        p_new = pattern[depth]
        total = 0
        for i in range(start, n - (k - depth) + 1):
            v = word[i]
            for j in range(depth):
                if (chosen[j] < v) != (pattern[j] < p_new):
                    break
            else:
                chosen[depth] = v
                total += extend(depth + 1, i + 1)
        return total

    return extend(0, 0)


def unsigned_contains(v: Permutation, p: Permutation) -> bool:
    """Classical containment of the unsigned pattern p in v."""
    return word_contains(v.oneline, p.oneline)


def classical_contains(w: SignedPermutation, q: SignedPermutation) -> bool:
    return signed_word_contains(w.window, q.window)


def global_contains(w: SignedPermutation, p: Permutation) -> bool:
    """Containment of the unsigned pattern p in the mirror word of w."""
    return word_contains(w.mirror_word(), p.oneline)


def count_global_occurrences(w: SignedPermutation, p: Permutation) -> int:
    """Number of distinct global occurrences of p in w (by index subset)."""
    return count_word_occurrences(w.mirror_word(), p.oneline)


def _unsigned_words(patterns: Iterable[Permutation]) -> tuple[tuple[int, ...], ...]:
    return tuple(p.oneline for p in patterns)


def _signed_words(patterns: Iterable[SignedPermutation]) -> tuple[tuple[int, ...], ...]:
    return tuple(q.window for q in patterns)


def gav(n: int, patterns: Iterable[Permutation]) -> Iterator[SignedPermutation]:
    """
    The signed permutations of size n globally avoiding every pattern,
    streamed in lexicographic window order.
    """
    words = _unsigned_words(patterns)
    for window in iter_windows(n):
        mirror = mirror_of_window(window)
        if not any(word_contains(mirror, p) for p in words):
            yield SignedPermutation(window)


def classical_avoiders(
    n: int, patterns: Iterable[SignedPermutation]
) -> Iterator[SignedPermutation]:
    """The signed permutations of size n classically avoiding every pattern."""
    words = _signed_words(patterns)
    for window in iter_windows(n):
        if not any(signed_word_contains(window, q) for q in words):
            yield SignedPermutation(window)


def count_avoiders(
    n: int,
    pattern_words: Sequence[Sequence[int]],
    mode: str = "global",
    first: int | None = None,
) -> int:
    """
    Count avoiders among windows of size n, optionally restricted to a fixed
    first window entry (the branch used to partition parallel counting).
    """
    if mode == "global":
        count = 0
        for window in iter_windows(n, first=first):
            mirror = mirror_of_window(window)
            if not any(word_contains(mirror, p) for p in pattern_words):
                count += 1
        return count
    if mode == "classical":
        count = 0
        for window in iter_windows(n, first=first):
            if not any(signed_word_contains(window, q) for q in pattern_words):
                count += 1
        return count
    raise ValueError(f"unknown mode {mode!r}")


def gav_count(n: int, patterns: Iterable[Permutation]) -> int:
    return count_avoiders(n, _unsigned_words(patterns), mode="global")


def classical_avoider_count(n: int, patterns: Iterable[SignedPermutation]) -> int:
    return count_avoiders(n, _signed_words(patterns), mode="classical")


def delete_window_entry(window: Sequence[int], index: int) -> tuple[int, ...]:
    """
    Remove one window entry and re-rank the remaining absolute values,
    keeping signs: the unique signed pattern of size n - 1 occurring at the
    remaining positions.
    """
    remaining = [v for i, v in enumerate(window) if i != index]
    ranks = {a: r + 1 for r, a in enumerate(sorted(abs(v) for v in remaining))}
    return tuple(ranks[abs(v)] if v > 0 else -ranks[abs(v)] for v in remaining)


def global_basis(patterns: Iterable[Permutation]) -> tuple[SignedPermutation, ...]:
    """
    The minimal set of signed patterns whose classical avoidance class equals
    the global avoidance class of `patterns`.

    Every signed permutation of size at most m (the largest pattern size)
    that globally contains one of the patterns is collected; the minimal
    members under classical containment form the basis.  Minimality is
    decided by single-entry deletion, which is exactly one-step classical
    containment.  Output is ordered by size, then lexicographically.
    """
    words = _unsigned_words(patterns)
    if not words:
        raise ValueError("pattern set must be nonempty")
    m = max(len(p) for p in words)
    if m > MAX_BASIS_PATTERN_SIZE:
        raise PatternTooLargeError(
            f"pattern size {m} exceeds basis cap {MAX_BASIS_PATTERN_SIZE}"
        )
    members: set[tuple[int, ...]] = set()
    for size in range(1, m + 1):
        for window in iter_windows(size):
            mirror = mirror_of_window(window)
            if any(word_contains(mirror, p) for p in words):
                members.add(window)
    basis = []
    for window in sorted(members, key=lambda win: (len(win), win)):
        if all(
            delete_window_entry(window, j) not in members for j in range(len(window))
        ):
            basis.append(SignedPermutation(window))
    return tuple(basis)


def apply_symmetry_to_set(
    patterns: Iterable[Permutation], symmetry: DihedralSymmetry
) -> frozenset[Permutation]:
    return frozenset(p.apply_symmetry(symmetry) for p in patterns)


def symmetry_class_counts(
    patterns: Iterable[Permutation], symmetry: DihedralSymmetry, n: int
) -> tuple[int, int]:
    """|GAV_n(P)| and |GAV_n(P^s)|; the dihedral action preserves the count."""
    pats = tuple(patterns)
    transformed = apply_symmetry_to_set(pats, symmetry)
    return gav_count(n, pats), gav_count(n, transformed)


def rc_reduce(patterns: Iterable[Permutation]) -> frozenset[Permutation]:
    """
    One representative per {p, reverse_complement(p)} pair; the global
    avoidance class is unchanged because an occurrence of p in a mirror word
    reflects to an occurrence of its reverse-complement.
    """
    return frozenset(
        min(p, p.reverse_complement(), key=lambda q: q.oneline) for p in patterns
    )


def parse_unsigned_patterns(text: str) -> tuple[Permutation, ...]:
    """Parse a ";"-separated set of unsigned patterns, e.g. "3,4,1,2;4,2,3,1"."""
    parts = [part for part in text.split(";") if part.strip()]
    return tuple(Permutation(parse_window(part)) for part in parts)


def parse_signed_patterns(text: str) -> tuple[SignedPermutation, ...]:
    """Parse a ";"-separated set of signed patterns, e.g. "-2,1;-1,-2"."""
    parts = [part for part in text.split(";") if part.strip()]
    return tuple(SignedPermutation(parse_window(part)) for part in parts)


def format_pattern_set(
    patterns: Iterable[Permutation] | Iterable[SignedPermutation],
) -> str:
    return ";".join(str(p) for p in patterns)
