"""
Partitions, standard Young tableaux, Robinson-Schensted shapes, and domino
tableaux.

Partitions are plain tuples of weakly decreasing positive integers.  A
standard domino tableau of shape lambda (|lambda| = 2n) is a tiling of the
Young diagram by n dominoes labelled 1..n such that the cells covered by the
first i dominoes form a Young diagram for every i; equivalently, labels
increase along rows and columns.

All counts are exact integers.  The hook-length and multidimensional Catalan
formulas multiply numerators out in full and divide once at the end, with the
divisibility asserted.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .core import SignedPermutation

Cell = tuple[int, int]


class InvalidPartitionError(ValueError):
    """Parts must be positive and weakly decreasing."""


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    shape = tuple(parts)
    if any(p <= 0 for p in shape):
        raise InvalidPartitionError(f"parts must be positive: {shape!r}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise InvalidPartitionError(f"parts must weakly decrease: {shape!r}")
    return shape


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse comma-separated parts, e.g. "4,2"."""
    text = text.strip()
    if not text:
        return ()
    return check_partition(tuple(int(p) for p in text.split(",")))


def partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of `total` with parts bounded by `max_part`."""
    if total == 0:
        yield ()
        return
    cap = total if max_part is None else min(max_part, total)
    for first in range(cap, 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def syt_count(shape: Sequence[int]) -> int:
    """Number of standard Young tableaux of the given shape (hook lengths)."""
    shape = check_partition(shape)
    n = sum(shape)
    if n == 0:
        return 1
    hook_product = 1
    for i, row_len in enumerate(shape):
        for j in range(row_len):
            leg = sum(1 for r in shape[i + 1 :] if r > j)
            hook_product *= row_len - j + leg
    count, remainder = divmod(factorial(n), hook_product)
    assert remainder == 0, f"hook product {hook_product} does not divide {n}!"
    return count


def standard_tableaux(shape: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """
    All standard Young tableaux of `shape`, as row tuples.  Labels are placed
    in increasing order at addable corners, so every prefix is a Young diagram.
    """
    shape = check_partition(shape)
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def rec(label: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if label > n:
            yield tuple(tuple(row) for row in rows)
            return
        for i, row in enumerate(rows):
            if len(row) < shape[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(label)
                yield from rec(label + 1)
                row.pop()

    return rec(1)


def rs_shape(word: Sequence[int]) -> tuple[int, ...]:
    """Shape of the Robinson-Schensted insertion tableau of a distinct-int word."""
    rows: list[list[int]] = []
    for value in word:
        v = value
        for row in rows:
            idx = bisect_left(row, v)
            if idx == len(row):
                row.append(v)
                v = None
                break
            row[idx], v = v, row[idx]
        if v is not None:
            rows.append([v])
    return tuple(len(row) for row in rows)


def lis(word: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence."""
    best = [0] * len(word)
    for i, v in enumerate(word):
        best[i] = 1 + max((best[j] for j in range(i) if word[j] < v), default=0)
    return max(best, default=0)


def lds(word: Sequence[int]) -> int:
    """Length of the longest strictly decreasing subsequence."""
    return lis([-v for v in word])


@dataclass(frozen=True)
class DominoTableau:
    """A standard domino tableau: dominoes in label order, cells row-major."""

    placements: tuple[tuple[Cell, Cell], ...]

    @property
    def size(self) -> int:
        return len(self.placements)

    def shape(self) -> tuple[int, ...]:
        row_lengths: dict[int, int] = {}
        for domino in self.placements:
            for r, _ in domino:
                row_lengths[r] = row_lengths.get(r, 0) + 1
        return tuple(row_lengths[r] for r in sorted(row_lengths))

    def grid(self) -> tuple[tuple[int, ...], ...]:
        """Labels by cell, one tuple per row."""
        shape = self.shape()
        rows = [[0] * length for length in shape]
        for label, domino in enumerate(self.placements, start=1):
            for r, c in domino:
                rows[r][c] = label
        return tuple(tuple(row) for row in rows)

    def __str__(self) -> str:
        return "/".join(",".join(str(v) for v in row) for row in self.grid())


def _domino_placements(
    partial: Sequence[int], shape: Sequence[int]
) -> list[tuple[Cell, Cell]]:
    """Dominoes addable to the partial diagram while staying inside `shape`."""
    out: list[tuple[Cell, Cell]] = []
    for r in range(len(shape)):
        row_len = partial[r]
        if row_len + 2 <= shape[r] and (r == 0 or partial[r - 1] >= row_len + 2):
            out.append(((r, row_len), (r, row_len + 1)))
        if (
            r + 1 < len(shape)
            and partial[r] == partial[r + 1]
            and row_len + 1 <= shape[r + 1]
            and (r == 0 or partial[r - 1] >= row_len + 1)
        ):
            out.append(((r, row_len), (r + 1, row_len)))
    return out


def domino_tableaux(shape: Sequence[int]) -> Iterator[DominoTableau]:
    """All standard domino tableaux of `shape`, each exactly once."""
    shape = check_partition(shape)
    if sum(shape) % 2 != 0:
        return
    n = sum(shape) // 2
    partial = [0] * len(shape)
    placed: list[tuple[Cell, Cell]] = []

    def rec() -> Iterator[DominoTableau]:
        if len(placed) == n:
            yield DominoTableau(tuple(placed))
            return
        for domino in _domino_placements(partial, shape):
            for r, c in domino:
                partial[r] += 1
            placed.append(domino)
            yield from rec()
            placed.pop()
            for r, c in domino:
                partial[r] -= 1

    yield from rec()


def domino_count(shape: Sequence[int]) -> int:
    """Number of standard domino tableaux of `shape` (0 for odd size)."""
    shape = check_partition(shape)
    if sum(shape) % 2 != 0:
        return 0
    memo: dict[tuple[int, ...], int] = {}

    def count_from(partial: tuple[int, ...]) -> int:
        if sum(partial) == sum(shape):
            return 1
        cached = memo.get(partial)
        if cached is not None:
            return cached
        total = 0
        for domino in _domino_placements(partial, shape):
            grown = list(partial)
            for r, _ in domino:
                grown[r] += 1
            total += count_from(tuple(grown))
        memo[partial] = total
        return total

    return count_from((0,) * len(shape))


def two_core(shape: Sequence[int]) -> tuple[int, ...]:
    """
    The 2-core: what remains after repeatedly removing border dominoes.
    The result is independent of removal order.
    """
    parts = list(check_partition(shape))
    while True:
        for i in range(len(parts)):
            below = parts[i + 1] if i + 1 < len(parts) else 0
            if parts[i] - 2 >= below:
                parts[i] -= 2
                break
            if (
                i + 1 < len(parts)
                and parts[i] == parts[i + 1]
                and parts[i + 1] - 1 >= (parts[i + 2] if i + 2 < len(parts) else 0)
            ):
                parts[i] -= 1
                parts[i + 1] -= 1
                break
        else:
            break
        parts = [p for p in parts if p > 0]
    return tuple(parts)


def is_domino_tileable(shape: Sequence[int]) -> bool:
    """True iff the diagram can be tiled by dominoes, i.e. its 2-core is empty."""
    return two_core(shape) == ()


def catalan_multidim(j: int, k: int) -> int:
    """
    The k-th j-dimensional Catalan number: the number of standard Young
    tableaux of the j-by-k rectangle,

        (kj)! (1! 2! ... (j-1)!) (1! 2! ... (k-1)!) / (1! 2! ... (k+j-1)!).
    """
    if j < 1 or k < 1:
        raise ValueError("dimensions must be positive")
    numerator = factorial(k * j)
    for t in range(1, j):
        numerator *= factorial(t)
    for t in range(1, k):
        numerator *= factorial(t)
    denominator = 1
    for t in range(1, k + j):
        denominator *= factorial(t)
    value, remainder = divmod(numerator, denominator)
    assert remainder == 0, f"Catalan formula not integral at j={j}, k={k}"
    return value


def shape_of_signed(w: SignedPermutation) -> tuple[int, ...]:
    """
    Robinson-Schensted shape of the mirror word: first part is the longest
    increasing subsequence of the mirror word, part count the longest
    decreasing one.
    """
    return rs_shape(w.mirror_word())
