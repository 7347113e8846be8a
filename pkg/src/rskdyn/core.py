"""Permutations, integer partitions, and Young tableaux.

Conventions used throughout the package:

- Permutations are in one-line notation over {1, ..., n} and printed as
  comma-separated values, e.g. ``2,4,7,3,5,1,6,8``.
- Partitions are weakly decreasing positive parts, printed as ``4,2,2``.
- Tableaux are stored in French notation: ``rows[0]`` is the *bottom* row,
  row lengths weakly decrease going up, rows increase left to right and
  columns increase bottom to top.  The text form lists rows bottom to top
  separated by ``/``, e.g. ``1 3 7 8 / 2 5 / 4 6``.

A :class:`Tableau` may hold any strictly increasing filling with distinct
positive entries (row insertion passes through such intermediate states);
``is_standard`` tells whether the entries are exactly 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


DEFAULT_SYT_BOUND = 12


class BoundExceeded(ValueError):
    """An enumeration was asked to run above its configured size cap."""


class MalformedPair(ValueError):
    """An (insertion, recording) pair with mismatched shapes or a nonstandard member."""


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if n == 0:
            raise ValueError("a permutation must have size at least 1")
        if len(set(entries)) != n:
            raise ValueError(f"duplicate value in permutation: {entries}")
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"entries must be exactly 1..{n}: {entries}")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.entries)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse comma-separated one-line notation; whitespace is tolerated."""
        try:
            entries = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse permutation from {text!r}") from None
        return cls(entries)


def inverse_permutation(p: Permutation) -> Permutation:
    """The permutation sending each value back to its position in ``p``."""
    inverse = [0] * p.size
    for position, value in enumerate(p.entries, start=1):
        inverse[value - 1] = position
    return Permutation(tuple(inverse))


def is_involution(p: Permutation) -> bool:
    """True when ``p`` equals its own inverse."""
    return inverse_permutation(p) == p


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts.  The empty partition (of 0) is allowed."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(part < 1 for part in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse partition from {text!r}") from None
        return cls(parts)


def conjugate_partition(shape: Partition) -> Partition:
    """The transposed shape: part i is the number of parts of ``shape`` that are >= i."""
    if not shape.parts:
        return shape
    widest = shape.parts[0]
    counts = tuple(sum(1 for part in shape.parts if part >= i) for i in range(1, widest + 1))
    return Partition(counts)


def is_self_conjugate(shape: Partition) -> bool:
    return conjugate_partition(shape) == shape


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n``, reverse-lexicographic: (n) first, (1,...,1) last."""
    if n < 1:
        raise ValueError("n must be at least 1")
    found: list[Partition] = []
    prefix: list[int] = []

    def extend(remaining: int, cap: int) -> None:
        if remaining == 0:
            found.append(Partition(tuple(prefix)))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            extend(remaining - part, part)
            prefix.pop()

    extend(n, n)
    return found


def partitions_distinct_odd(n: int) -> list[Partition]:
    """Partitions of ``n`` whose parts are pairwise distinct and all odd."""
    return [
        shape
        for shape in partitions_of(n)
        if all(part % 2 == 1 for part in shape.parts)
        and all(shape.parts[i] > shape.parts[i + 1] for i in range(len(shape.parts) - 1))
    ]


@dataclass(frozen=True)
class Tableau:
    """A strictly increasing filling of a Young diagram, bottom row first."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        seen: set[int] = set()
        for r, row in enumerate(rows):
            if not row:
                raise ValueError("rows must be nonempty")
            if r > 0 and len(row) > len(rows[r - 1]):
                raise ValueError(f"row lengths must weakly decrease upward: {rows}")
            for c, value in enumerate(row):
                if value < 1:
                    raise ValueError(f"entries must be positive: {value}")
                if c > 0 and row[c - 1] >= value:
                    raise ValueError(f"row {r} is not strictly increasing: {row}")
                if r > 0 and rows[r - 1][c] >= value:
                    raise ValueError(f"column {c} is not strictly increasing: {rows}")
                if value in seen:
                    raise ValueError(f"duplicate entry {value}")
                seen.add(value)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def is_standard(self) -> bool:
        """True when the entries are exactly {1, ..., n}."""
        entries = sorted(value for row in self.rows for value in row)
        return entries == list(range(1, self.size + 1))

    def column(self, c: int) -> tuple[int, ...]:
        """Entries of column ``c`` from bottom to top."""
        return tuple(row[c] for row in self.rows if len(row) > c)

    def position_of(self, value: int) -> tuple[int, int]:
        """(row, column) of ``value``; raises ValueError when absent."""
        for r, row in enumerate(self.rows):
            for c, entry in enumerate(row):
                if entry == value:
                    return r, c
        raise ValueError(f"{value} is not in the tableau")

    def __str__(self) -> str:
        return " / ".join(" ".join(str(value) for value in row) for row in self.rows)

    @classmethod
    def parse(cls, text: str) -> Tableau:
        """Parse the ``/``-separated bottom-to-top row format."""
        rows = []
        for chunk in text.split("/"):
            tokens = chunk.split()
            if not tokens:
                raise ValueError(f"empty row in tableau text {text!r}")
            try:
                rows.append(tuple(int(tok) for tok in tokens))
            except ValueError:
                raise ValueError(f"cannot parse tableau from {text!r}") from None
        return cls(tuple(rows))


@dataclass(frozen=True)
class TableauPair:
    """An (insertion, recording) pair of equal-shape standard tableaux."""

    insertion: Tableau
    recording: Tableau

    def __post_init__(self) -> None:
        if self.insertion.shape != self.recording.shape:
            raise MalformedPair(
                f"shapes differ: {self.insertion.shape} vs {self.recording.shape}"
            )
        if not self.insertion.is_standard or not self.recording.is_standard:
            raise MalformedPair("both tableaux must be standard")

    @property
    def shape(self) -> Partition:
        return self.insertion.shape

    def swapped(self) -> TableauPair:
        return TableauPair(self.recording, self.insertion)

    def __str__(self) -> str:
        return f"{self.insertion} | {self.recording}"

    @classmethod
    def parse(cls, text: str) -> TableauPair:
        left, sep, right = text.partition("|")
        if not sep:
            raise ValueError(f"expected 'S | T' with a '|' separator, got {text!r}")
        return cls(Tableau.parse(left), Tableau.parse(right))


def row_reading_word(t: Tableau) -> Permutation:
    """Rows concatenated from the top row down to the bottom row."""
    word: list[int] = []
    for row in reversed(t.rows):
        word.extend(row)
    return Permutation(tuple(word))


def column_reading_word(t: Tableau) -> Permutation:
    """Columns left to right, each read from top to bottom."""
    word: list[int] = []
    heights = conjugate_partition(t.shape).parts
    for c, height in enumerate(heights):
        word.extend(t.rows[r][c] for r in range(height - 1, -1, -1))
    return Permutation(tuple(word))


def reversed_reading_word(t: Tableau) -> Permutation:
    """The row reading word taken right to left."""
    return Permutation(tuple(reversed(row_reading_word(t).entries)))


def transpose_tableau(t: Tableau) -> Tableau:
    """Reflect about the diagonal through the bottom-left corner."""
    if not t.rows:
        return t
    conj = conjugate_partition(t.shape).parts
    return Tableau(
        tuple(tuple(t.rows[c][r] for c in range(conj[r])) for r in range(len(conj)))
    )


def enumerate_syt(shape: Partition, max_size: int = DEFAULT_SYT_BOUND) -> list[Tableau]:
    """Every standard Young tableau of ``shape``, in a fixed deterministic order.

    Values 1..n are placed in increasing order; at each step the candidate
    cells are tried from the bottom row up, which fixes the output order.
    Raises :class:`BoundExceeded` for shapes larger than ``max_size``.
    """
    if shape.n > max_size:
        raise BoundExceeded(f"|shape| = {shape.n} exceeds the enumeration bound {max_size}")
    parts = shape.parts
    if not parts:
        return [Tableau(())]
    n = shape.n
    grid = [[0] * width for width in parts]
    filled = [0] * len(parts)
    found: list[Tableau] = []

    def place(value: int) -> None:
        if value > n:
            found.append(Tableau(tuple(tuple(row) for row in grid)))
            return
        for r in range(len(parts)):
            # next free cell of row r is usable when the cell below it is filled
            if filled[r] < parts[r] and (r == 0 or filled[r] < filled[r - 1]):
                grid[r][filled[r]] = value
                filled[r] += 1
                place(value + 1)
                filled[r] -= 1

    place(1)
    return found
