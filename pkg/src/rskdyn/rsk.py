"""Row insertion and the bijection between permutations and tableau pairs."""

from __future__ import annotations

from bisect import bisect_left

from .core import (
    Permutation,
    Tableau,
    TableauPair,
    inverse_permutation,
)


class DuplicateEntry(ValueError):
    """Raised when inserting a value already present in the tableau (caller bug)."""


def _bump(rows: list[list[int]], value: int) -> tuple[int, int]:
    """Row-insert ``value`` into mutable ``rows``; return the (row, col) of the new cell.

    Each row is scanned by binary search for the leftmost entry greater than
    the incoming value; that entry is displaced into the row above, and the
    chain stops at the first row that takes the value at its end.
    """
    r = 0
    while r < len(rows):
        row = rows[r]
        c = bisect_left(row, value)
        if c == len(row):
            row.append(value)
            assert r == 0 or len(rows[r - 1]) > c  # new cell must sit on a filled cell
            assert r == 0 or rows[r - 1][c] < value
            return r, c
        value, row[c] = row[c], value
        assert r == 0 or rows[r - 1][c] < row[c]  # bump keeps columns increasing
        r += 1
    rows.append([value])
    return len(rows) - 1, 0


def _freeze(rows: list[list[int]]) -> Tableau:
    return Tableau(tuple(tuple(row) for row in rows))


def insert_entry(t: Tableau, value: int) -> tuple[Tableau, tuple[int, int]]:
    """Row-insert ``value`` into ``t``; return the new tableau and the new cell.

    The new shape covers the old shape plus exactly one cell.  Raises
    :class:`DuplicateEntry` when ``value`` already occurs in ``t``.
    """
    if any(value in row for row in t.rows):
        raise DuplicateEntry(f"{value} already occurs in the tableau")
    rows = [list(row) for row in t.rows]
    cell = _bump(rows, value)
    return _freeze(rows), cell


def rsk_forward(p: Permutation) -> TableauPair:
    """Insert the entries of ``p`` left to right, recording each new cell's step."""
    insertion: list[list[int]] = []
    recording: list[list[int]] = []
    for step, value in enumerate(p.entries, start=1):
        r, c = _bump(insertion, value)
        if r == len(recording):
            recording.append([])
        recording[r].append(step)
        assert len(recording[r]) == c + 1  # recording copies the insertion shape
    return TableauPair(_freeze(insertion), _freeze(recording))


def rsk_trace(p: Permutation) -> list[tuple[Tableau, Tableau]]:
    """The (insertion, recording) state after each of the n insertion steps."""
    insertion: list[list[int]] = []
    recording: list[list[int]] = []
    states: list[tuple[Tableau, Tableau]] = []
    for step, value in enumerate(p.entries, start=1):
        r, _ = _bump(insertion, value)
        if r == len(recording):
            recording.append([])
        recording[r].append(step)
        states.append((_freeze(insertion), _freeze(recording)))
    return states


def rsk_inverse(pair: TableauPair) -> Permutation:
    """The unique permutation mapping to ``pair`` under :func:`rsk_forward`.

    Recording labels are removed in decreasing order; each removal ejects the
    matching insertion cell and reverse-bumps it down to the bottom row.
    """
    rows = [list(row) for row in pair.insertion.rows]
    reversed_word: list[int] = []
    for label in range(pair.insertion.size, 0, -1):
        r, c = pair.recording.position_of(label)
        assert c == len(rows[r]) - 1  # decreasing labels are always at row ends
        value = rows[r].pop()
        if not rows[r]:
            rows.pop()
        for lower in range(r - 1, -1, -1):
            row = rows[lower]
            c = bisect_left(row, value) - 1
            assert c >= 0  # a bumped value always displaces something below
            value, row[c] = row[c], value
        reversed_word.append(value)
    return Permutation(tuple(reversed(reversed_word)))


def check_inverse_theorem(p: Permutation) -> bool:
    """True when the inverse permutation maps to the swapped tableau pair."""
    return rsk_forward(inverse_permutation(p)) == rsk_forward(p).swapped()
