"""Brute-force subsequence statistics, kept independent of the insertion code.

``max_k_increasing`` and ``max_k_decreasing`` search every subset of positions
outright, so their agreement with the shape produced by row insertion is
meaningful evidence rather than a tautology.  The subset search caps out at
``ORACLE_BOUND`` positions.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from .core import BoundExceeded, Permutation, conjugate_partition
from .rsk import rsk_forward


ORACLE_BOUND = 10


def longest_increasing_length(values: Sequence[int]) -> int:
    """Length of the longest strictly increasing subsequence (patience piles)."""
    piles: list[int] = []
    for value in values:
        idx = bisect_left(piles, value)
        if idx == len(piles):
            piles.append(value)
        else:
            piles[idx] = value
    return len(piles)


def longest_decreasing_length(values: Sequence[int]) -> int:
    return longest_increasing_length([-value for value in values])


def is_k_increasing(values: Sequence[int], k: int) -> bool:
    """True when the sequence splits into ``k`` disjoint increasing subsequences.

    Equivalently: it contains no decreasing subsequence of length k + 1.
    """
    return longest_decreasing_length(values) <= k


def is_k_decreasing(values: Sequence[int], k: int) -> bool:
    """True when the sequence splits into ``k`` disjoint decreasing subsequences."""
    return longest_increasing_length(values) <= k


def _check_input(values: Sequence[int], bound: int) -> tuple[int, ...]:
    word = tuple(values)
    if len(set(word)) != len(word):
        raise ValueError(f"values must be distinct: {word}")
    if len(word) > bound:
        raise BoundExceeded(f"{len(word)} positions exceed the oracle bound {bound}")
    return word


def _max_subset_length(word: tuple[int, ...], keep) -> int:
    n = len(word)
    best = 0
    for mask in range(1 << n):
        subsequence = [word[i] for i in range(n) if mask >> i & 1]
        if len(subsequence) > best and keep(subsequence):
            best = len(subsequence)
    return best


def max_k_increasing(values: Sequence[int], k: int, bound: int = ORACLE_BOUND) -> int:
    """Maximum size of a subset of positions whose subsequence is k-increasing."""
    word = _check_input(values, bound)
    return _max_subset_length(word, lambda sub: is_k_increasing(sub, k))


def max_k_decreasing(values: Sequence[int], k: int, bound: int = ORACLE_BOUND) -> int:
    """Maximum size of a subset of positions whose subsequence is k-decreasing."""
    word = _check_input(values, bound)
    return _max_subset_length(word, lambda sub: is_k_decreasing(sub, k))


@dataclass(frozen=True)
class SubsequenceStats:
    """Maximal k-increasing and k-decreasing subsequence lengths, indexed by k.

    ``increasing[k-1]`` is the longest length achievable with k increasing
    runs; both tuples extend exactly until they reach the word length.
    """

    increasing: tuple[int, ...]
    decreasing: tuple[int, ...]


def subsequence_stats(values: Sequence[int], bound: int = ORACLE_BOUND) -> SubsequenceStats:
    """Compute all saturating k-increasing/k-decreasing maxima in one subset sweep."""
    word = _check_input(values, bound)
    n = len(word)
    # best_inc[d] = largest subset whose longest decreasing run is exactly d
    best_inc = [0] * (n + 1)
    best_dec = [0] * (n + 1)
    for mask in range(1 << n):
        subsequence = [word[i] for i in range(n) if mask >> i & 1]
        size = len(subsequence)
        down = longest_decreasing_length(subsequence)
        if size > best_inc[down]:
            best_inc[down] = size
        up = longest_increasing_length(subsequence)
        if size > best_dec[up]:
            best_dec[up] = size

    def saturate(best: list[int]) -> tuple[int, ...]:
        out: list[int] = []
        for k in range(1, n + 1):
            out.append(max(best[: k + 1]))
            if out[-1] == n:
                break
        return tuple(out)

    return SubsequenceStats(saturate(best_inc), saturate(best_dec))


def verify_shape_theorem(p: Permutation, bound: int = ORACLE_BOUND) -> bool:
    """Check that the insertion shape's prefix sums match the subset oracle.

    Row prefix sums must equal the k-increasing maxima and column prefix sums
    the k-decreasing maxima, for every k up to the respective counts.
    """
    shape = rsk_forward(p).shape
    conjugate = conjugate_partition(shape)
    stats = subsequence_stats(p.entries, bound)
    row_sums = tuple(accumulate(shape.parts))
    col_sums = tuple(accumulate(conjugate.parts))
    return (
        all(stats.increasing[j] == row_sums[j] for j in range(len(row_sums)))
        and all(stats.decreasing[j] == col_sums[j] for j in range(len(col_sums)))
    )
