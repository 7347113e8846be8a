"""The exhaustive subsequence oracle and its agreement with the insertion shape."""

from itertools import permutations as one_line_words

import pytest

from rskdyn import (
    BoundExceeded,
    Permutation,
    is_k_decreasing,
    is_k_increasing,
    max_k_decreasing,
    max_k_increasing,
    subsequence_stats,
    verify_shape_theorem,
)


WORD = (7, 8, 6, 2, 3, 1, 5, 4)
RUNNING = (2, 4, 7, 3, 5, 1, 6, 8)


class TestMembership:
    def test_three_decreasing_example(self):
        # splits into (7,2,1), (8,6,3), (5,4)
        assert is_k_decreasing(WORD, 3)
        assert not is_k_decreasing(WORD, 2)

    def test_increasing_word_is_one_increasing(self):
        assert is_k_increasing((1, 2, 5, 9), 1)

    def test_descending_pair_is_not_one_increasing(self):
        assert not is_k_increasing((2, 1), 1)

    def test_distinctness_required(self):
        with pytest.raises(ValueError):
            max_k_increasing((1, 1, 2), 1)


class TestMaxima:
    def test_two_decreasing_maximum_is_seven(self):
        assert max_k_decreasing(WORD, 2) == 7

    def test_running_example_statistics(self):
        assert max_k_increasing(RUNNING, 1) == 5
        assert max_k_decreasing(RUNNING, 1) == 3
        assert max_k_decreasing(RUNNING, 2) == 5

    def test_monotone_in_k(self):
        for word in one_line_words(range(1, 6)):
            previous_up, previous_down = 0, 0
            for k in range(1, 6):
                up = max_k_increasing(word, k)
                down = max_k_decreasing(word, k)
                assert previous_up <= up <= len(word)
                assert previous_down <= down <= len(word)
                previous_up, previous_down = up, down

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            max_k_increasing(tuple(range(1, 12)), 1)


class TestStats:
    def test_stats_match_individual_maxima(self):
        for word in one_line_words(range(1, 6)):
            stats = subsequence_stats(word)
            for k, value in enumerate(stats.increasing, start=1):
                assert value == max_k_increasing(word, k)
            for k, value in enumerate(stats.decreasing, start=1):
                assert value == max_k_decreasing(word, k)
            assert stats.increasing[-1] == len(word)
            assert stats.decreasing[-1] == len(word)

    def test_reversal_swaps_roles(self):
        for n in range(1, 7):
            for word in one_line_words(range(1, n + 1)):
                stats = subsequence_stats(word)
                mirrored = subsequence_stats(tuple(reversed(word)))
                assert stats.increasing == mirrored.decreasing
                assert stats.decreasing == mirrored.increasing


class TestShapeTheorem:
    def test_running_example(self):
        assert verify_shape_theorem(Permutation(RUNNING))

    def test_identity(self):
        assert verify_shape_theorem(Permutation.identity(6))

    def test_exhaustive_through_s5(self):
        for n in range(1, 6):
            for word in one_line_words(range(1, n + 1)):
                assert verify_shape_theorem(Permutation(word))
