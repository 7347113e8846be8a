"""One-shot structural verification at desk scale.

Every invariant the package promises is re-checked here from scratch:
bijectivity of the insertion map, the inverse/involution symmetries, the
subsequence-statistics characterization of the shape, convergence and
fixed-point classification of all three iterated maps, and the counting
identities.  Sizes 1..6 are swept exhaustively; sizes 7 and 8 use seeded
random samples.  Output is deterministic for a given (size, seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations as one_line_words
from math import factorial
from typing import Callable, Iterable, Iterator

from .core import (
    Partition,
    Permutation,
    Tableau,
    TableauPair,
    column_reading_word,
    conjugate_partition,
    enumerate_syt,
    is_involution,
    is_self_conjugate,
    partitions_of,
    reversed_reading_word,
    row_reading_word,
    transpose_tableau,
)
from .dynamics import (
    MapKind,
    build_graph,
    census_of,
    cycles_of,
    expected_census,
    fixed_point_for_shape,
    orbit,
    q_lambda,
    r_cycle_for_shape,
    step,
    t_lambda,
    t_lambda_gravity,
)
from .greene import subsequence_stats, verify_shape_theorem
from .rsk import check_inverse_theorem, rsk_forward, rsk_inverse


EXHAUSTIVE_LIMIT = 6
MAX_VERIFY_SIZE = 8
SAMPLES_PER_SIZE = 200

# per-shape checks are cheap and always run at these fixed caps
FIXED_POINT_SHAPE_LIMIT = 10
GEOMETRY_SHAPE_LIMIT = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.detail}"


def _exhaustive_sizes(max_size: int) -> range:
    return range(1, min(max_size, EXHAUSTIVE_LIMIT) + 1)


def _sampled_sizes(max_size: int) -> range:
    return range(EXHAUSTIVE_LIMIT + 1, max_size + 1)


def _permutation_pool(max_size: int, seed: int) -> list[Permutation]:
    """All of S_1..S_6, then seeded samples for sizes 7..max_size."""
    pool: list[Permutation] = []
    for n in _exhaustive_sizes(max_size):
        pool.extend(Permutation(word) for word in one_line_words(range(1, n + 1)))
    rng = random.Random(seed)
    for n in _sampled_sizes(max_size):
        for _ in range(SAMPLES_PER_SIZE):
            pool.append(Permutation(tuple(rng.sample(range(1, n + 1), n))))
    return pool


def _all_syt(max_size: int) -> Iterator[Tableau]:
    for n in range(1, max_size + 1):
        for shape in partitions_of(n):
            yield from enumerate_syt(shape)


def _first_failure(
    items: Iterable, predicate: Callable, describe: Callable
) -> tuple[bool, str, int]:
    count = 0
    for item in items:
        count += 1
        if not predicate(item):
            return False, describe(item), count
    return True, "", count


def run_suite(max_size: int, seed: int = 0) -> list[CheckResult]:
    """Run every check; ``max_size`` caps the permutation pools (1..8)."""
    if not 1 <= max_size <= MAX_VERIFY_SIZE:
        raise ValueError(f"max_size must be between 1 and {MAX_VERIFY_SIZE}")
    pool = _permutation_pool(max_size, seed)
    results: list[CheckResult] = []

    def check(name: str, predicate, describe=str, items=None) -> None:
        passed, witness, count = _first_failure(
            pool if items is None else items, predicate, describe
        )
        detail = f"{count} cases" if passed else f"counterexample {witness}"
        results.append(CheckResult(name, passed, detail))

    check("round-trip-inverse-insertion", lambda p: rsk_inverse(rsk_forward(p)) == p)
    check("inverse-permutation-swaps-pair", check_inverse_theorem)

    def involution_iff_equal(p: Permutation) -> bool:
        pair = rsk_forward(p)
        return is_involution(p) == (pair.insertion == pair.recording)

    check("involution-iff-equal-tableaux", involution_iff_equal)
    check("shape-matches-subsequence-oracle", verify_shape_theorem)

    def reversal_swaps_stats(p: Permutation) -> bool:
        stats = subsequence_stats(p.entries)
        mirrored = subsequence_stats(tuple(reversed(p.entries)))
        return stats.increasing == mirrored.decreasing and stats.decreasing == mirrored.increasing

    small = [p for p in pool if p.size <= EXHAUSTIVE_LIMIT]
    check("reversal-swaps-subsequence-stats", reversal_swaps_stats, items=small)

    for kind in MapKind:
        def converges(p: Permutation, kind: MapKind = kind) -> bool:
            report = orbit(kind, p)
            if len(report.tail) > 2:
                return False
            if kind is MapKind.R:
                terminal = report.shapes[len(report.tail)]
                return len(report.cycle) == (1 if is_self_conjugate(terminal) else 2)
            return len(report.cycle) == 1

        check(f"orbit-convergence-map-{kind.value}", converges)

        def shape_behaviour(p: Permutation, kind: MapKind = kind) -> bool:
            before = rsk_forward(p).shape
            after = rsk_forward(step(kind, p)).shape
            if kind is MapKind.R:
                return after == conjugate_partition(before)
            return after == before

        check(f"shape-behaviour-map-{kind.value}", shape_behaviour)

    syt_limit = min(max_size, MAX_VERIFY_SIZE)
    tableaux = list(_all_syt(syt_limit))
    check(
        "row-word-reinsertion-returns-tableau",
        lambda t: rsk_forward(row_reading_word(t)).insertion == t,
        items=tableaux,
    )
    check(
        "column-word-reinsertion-returns-tableau",
        lambda t: rsk_forward(column_reading_word(t)).insertion == t,
        items=tableaux,
    )
    check(
        "reversed-word-inserts-to-transpose",
        lambda t: rsk_forward(reversed_reading_word(t)).insertion == transpose_tableau(t),
        items=tableaux,
    )
    check(
        "row-word-recording-is-constant-per-shape",
        lambda t: rsk_forward(row_reading_word(t)).recording == t_lambda(t.shape),
        items=tableaux,
    )
    check(
        "column-word-recording-is-constant-per-shape",
        lambda t: rsk_forward(column_reading_word(t)).recording == q_lambda(t.shape),
        items=tableaux,
    )
    check(
        "reversed-word-recording-is-conjugate-constant",
        lambda t: rsk_forward(reversed_reading_word(t)).recording
        == q_lambda(conjugate_partition(t.shape)),
        items=tableaux,
    )

    def squares_sum_to_factorial(n: int) -> bool:
        return sum(len(enumerate_syt(shape)) ** 2 for shape in partitions_of(n)) == factorial(n)

    check(
        "tableau-count-squares-sum-to-factorial",
        squares_sum_to_factorial,
        items=range(1, syt_limit + 1),
    )

    def non_identity_word_never_starts_with_one(n: int) -> bool:
        identity = Permutation.identity(n)
        for shape in partitions_of(n):
            for t in enumerate_syt(shape):
                word = row_reading_word(t)
                if word.entries[0] == 1 and word != identity:
                    return False
        return True

    check(
        "only-identity-reading-word-starts-with-one",
        non_identity_word_never_starts_with_one,
        items=_exhaustive_sizes(max_size),
    )

    def image_counts_match(n: int) -> bool:
        pairs = {rsk_forward(Permutation(w)) for w in one_line_words(range(1, n + 1))}
        expected = sum(len(enumerate_syt(shape)) ** 2 for shape in partitions_of(n))
        return len(pairs) == factorial(n) == expected

    check(
        "insertion-image-counts-permutations",
        image_counts_match,
        items=_exhaustive_sizes(max_size),
    )

    for kind in (MapKind.F, MapKind.C):
        def unique_fixed_points(n: int, kind: MapKind = kind) -> bool:
            graph = build_graph(kind, n)
            loops = {p for p, q in graph.successors.items() if p == q}
            predicted = {fixed_point_for_shape(kind, shape) for shape in partitions_of(n)}
            return loops == predicted and len(predicted) == len(partitions_of(n))

        check(
            f"one-fixed-point-per-shape-map-{kind.value}",
            unique_fixed_points,
            items=_exhaustive_sizes(max_size),
        )

    def census_matches(args: tuple[MapKind, int]) -> bool:
        kind, n = args
        result = census_of(build_graph(kind, n))
        fixed, two = expected_census(kind, n)
        return result.fixed_points == fixed and result.two_cycles == two and result.max_tail <= 2

    check(
        "census-matches-partition-counts",
        census_matches,
        items=[(kind, n) for kind in MapKind for n in _exhaustive_sizes(max_size)],
    )

    def r_cycles_classified(n: int) -> bool:
        graph = build_graph(MapKind.R, n)
        actual = {frozenset(loop) for loop in cycles_of(graph)}
        predicted = {frozenset(r_cycle_for_shape(shape)) for shape in partitions_of(n)}
        if actual != predicted:
            return False
        for shape in partitions_of(n):
            loop = r_cycle_for_shape(shape)
            if (len(loop) == 1) != is_self_conjugate(shape):
                return False
        return True

    check(
        "reversed-map-terminal-cycles-classified",
        r_cycles_classified,
        items=_exhaustive_sizes(max_size),
    )

    def fixed_points_are_involutions(shape: Partition) -> bool:
        row_fixed = fixed_point_for_shape(MapKind.F, shape)
        col_fixed = fixed_point_for_shape(MapKind.C, shape)
        expected_row = t_lambda(shape)
        expected_col = q_lambda(shape)
        return (
            is_involution(row_fixed)
            and is_involution(col_fixed)
            and rsk_forward(row_fixed) == TableauPair(expected_row, expected_row)
            and rsk_forward(col_fixed) == TableauPair(expected_col, expected_col)
        )

    shapes_to_ten = [
        shape for n in range(1, FIXED_POINT_SHAPE_LIMIT + 1) for shape in partitions_of(n)
    ]
    check(
        "terminal-permutations-are-involutions",
        fixed_points_are_involutions,
        items=shapes_to_ten,
    )

    def column_mirror_geometry(shape: Partition) -> bool:
        for tableau, fixed in (
            (t_lambda(shape), fixed_point_for_shape(MapKind.F, shape)),
            (q_lambda(shape), fixed_point_for_shape(MapKind.C, shape)),
        ):
            for c in range(shape.parts[0]):
                column = tableau.column(c)
                height = len(column)
                for i, value in enumerate(column):
                    if fixed.entries[value - 1] != column[height - 1 - i]:
                        return False
        return True

    shapes_to_eight = [
        shape for n in range(1, GEOMETRY_SHAPE_LIMIT + 1) for shape in partitions_of(n)
    ]
    check(
        "terminal-permutations-mirror-columns",
        column_mirror_geometry,
        items=shapes_to_eight,
    )

    check(
        "layered-and-gravity-constructions-agree",
        lambda shape: t_lambda(shape) == t_lambda_gravity(shape),
        items=shapes_to_ten,
    )

    check(
        "partition-count-matches-recurrence",
        lambda n: len(partitions_of(n)) == count_partitions(n),
        items=range(1, FIXED_POINT_SHAPE_LIMIT + 1),
    )

    return results


def count_partitions(n: int) -> int:
    """p(n) by the pentagonal-number recurrence, independent of the generator."""
    counts = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            sign = -1 if k % 2 == 0 else 1
            consumed = False
            for offset in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if offset <= m:
                    total += sign * counts[m - offset]
                    consumed = True
            if not consumed:
                break
            k += 1
        counts[m] = total
    return counts[n]
