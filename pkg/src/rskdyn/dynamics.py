"""The three iterated reading-word maps on permutations.

Each map sends a permutation through row insertion and reads the recording
tableau back out: ``F`` by rows (top to bottom), ``C`` by columns, ``R`` by
the reversed row word.  This module provides single steps, orbit reports,
closed-form terminal states per shape, full functional graphs over S_n, and
their census plus DOT/JSON serializations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import permutations as one_line_words
from typing import NamedTuple

from .core import (
    BoundExceeded,
    Partition,
    Permutation,
    Tableau,
    TableauPair,
    column_reading_word,
    conjugate_partition,
    is_self_conjugate,
    partitions_distinct_odd,
    partitions_of,
    reversed_reading_word,
    row_reading_word,
    transpose_tableau,
)
from .rsk import rsk_forward, rsk_inverse


GRAPH_BOUND = 8
DEFAULT_MAX_STEPS = 16


class NoCycleWithinBound(RuntimeError):
    """No repeated state within the step budget; must never fire below the bound."""


class UnsupportedMap(ValueError):
    """The requested construction does not exist for this map."""


class MapKind(Enum):
    """Which reading word of the recording tableau drives the iteration."""

    F = "f"  # row reading word
    C = "c"  # column reading word
    R = "r"  # reversed row reading word


def t_lambda(shape: Partition) -> Tableau:
    """The terminal recording tableau of the row-word map for ``shape``.

    Built layer by layer: walk the parts from shortest to longest; each layer
    of width m drops one cell onto the lowest free square of each of the
    first m columns, numbering the cells consecutively left to right.
    """
    if not shape.parts:
        return Tableau(())
    columns: list[list[int]] = [[] for _ in range(shape.parts[0])]
    value = 1
    for width in reversed(shape.parts):
        for c in range(width):
            columns[c].append(value)
            value += 1
    rows = tuple(
        tuple(column[r] for column in columns if len(column) > r)
        for r in range(len(shape.parts))
    )
    return Tableau(rows)


def t_lambda_gravity(shape: Partition) -> Tableau:
    """Alternative construction of :func:`t_lambda` used as a cross-check.

    Push all cells of the diagram up against the ceiling (which reverses the
    row lengths), fill the raised rows with 1..n bottom to top, then let every
    column fall back to the floor keeping its vertical order.
    """
    if not shape.parts:
        return Tableau(())
    raised: list[list[int]] = []
    value = 1
    for width in reversed(shape.parts):
        raised.append(list(range(value, value + width)))
        value += width
    rows = [[0] * width for width in shape.parts]
    for c in range(shape.parts[0]):
        fallen = [row[c] for row in raised if len(row) > c]
        for r, entry in enumerate(fallen):
            rows[r][c] = entry
    return Tableau(tuple(tuple(row) for row in rows))


def q_lambda(shape: Partition) -> Tableau:
    """The column-consecutive tableau: columns filled 1..n bottom to top, left to right."""
    if not shape.parts:
        return Tableau(())
    heights = conjugate_partition(shape).parts
    columns: list[range] = []
    value = 1
    for height in heights:
        columns.append(range(value, value + height))
        value += height
    rows = tuple(
        tuple(column[r] for column in columns if len(column) > r)
        for r in range(len(shape.parts))
    )
    return Tableau(rows)


def _advance(kind: MapKind, p: Permutation) -> tuple[Permutation, Partition]:
    """One application of the map, plus the shape of ``p``'s tableau pair."""
    pair = rsk_forward(p)
    if kind is MapKind.F:
        word = row_reading_word(pair.recording)
    elif kind is MapKind.C:
        word = column_reading_word(pair.recording)
    else:
        word = reversed_reading_word(pair.recording)
    return word, pair.shape


def step(kind: MapKind, p: Permutation) -> Permutation:
    """Apply the map once: insert ``p`` and read the recording tableau back out."""
    return _advance(kind, p)[0]


@dataclass(frozen=True)
class OrbitReport:
    """Tail and minimal cycle of one trajectory; ``shapes[i]`` labels ``visited[i]``."""

    tail: tuple[Permutation, ...]
    cycle: tuple[Permutation, ...]
    shapes: tuple[Partition, ...]

    @property
    def visited(self) -> tuple[Permutation, ...]:
        return self.tail + self.cycle


def orbit(kind: MapKind, p: Permutation, max_steps: int = DEFAULT_MAX_STEPS) -> OrbitReport:
    """Iterate until a state repeats and split the trajectory into tail + cycle.

    Raises :class:`NoCycleWithinBound` if no repeat shows up within
    ``max_steps`` applications; the generous default means such a failure
    signals a genuine convergence violation rather than a tight budget.
    """
    if max_steps < 4:
        raise ValueError("max_steps must be at least 4")
    seen: dict[Permutation, int] = {}
    sequence: list[Permutation] = []
    shapes: list[Partition] = []
    current = p
    while len(sequence) <= max_steps:
        if current in seen:
            start = seen[current]
            return OrbitReport(
                tail=tuple(sequence[:start]),
                cycle=tuple(sequence[start:]),
                shapes=tuple(shapes),
            )
        seen[current] = len(sequence)
        sequence.append(current)
        current, shape = _advance(kind, current)
        shapes.append(shape)
    raise NoCycleWithinBound(f"no repeat within {max_steps} steps starting from {p}")


def fixed_point_for_shape(kind: MapKind, shape: Partition) -> Permutation:
    """The unique fixed point of the row- or column-word map for ``shape``."""
    if kind is MapKind.F:
        return row_reading_word(t_lambda(shape))
    if kind is MapKind.C:
        return column_reading_word(q_lambda(shape))
    raise UnsupportedMap(
        "the reversed-word map fixes only self-conjugate shapes; use r_cycle_for_shape"
    )


def r_cycle_for_shape(shape: Partition) -> tuple[Permutation, ...]:
    """The terminal cycle of the reversed-word map for ``shape``.

    The cycle consists of the permutation whose pair is (transpose of the
    column-consecutive tableau of the conjugate shape, column-consecutive
    tableau of ``shape``) and its image, which has the conjugate pair; the two
    coincide exactly when the shape is self-conjugate.
    """
    conjugate = conjugate_partition(shape)
    first = rsk_inverse(
        TableauPair(transpose_tableau(q_lambda(conjugate)), q_lambda(shape))
    )
    if is_self_conjugate(shape):
        return (first,)
    second = rsk_inverse(
        TableauPair(transpose_tableau(q_lambda(shape)), q_lambda(conjugate))
    )
    return (first, second)


@dataclass(frozen=True)
class DynamicsGraph:
    """The whole functional graph of one map on S_n.

    ``successors`` and ``shapes`` are keyed in lexicographic order of one-line
    notation, which fixes every serialization of the graph.
    """

    kind: MapKind
    n: int
    successors: dict[Permutation, Permutation]
    shapes: dict[Permutation, Partition]


def build_graph(kind: MapKind, n: int, bound: int = GRAPH_BOUND) -> DynamicsGraph:
    """Successor and shape of every permutation in S_n (n! nodes, out-degree 1)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > bound:
        raise BoundExceeded(f"S_{n} has {n}! nodes, above the graph bound {bound}")
    successors: dict[Permutation, Permutation] = {}
    shapes: dict[Permutation, Partition] = {}
    for word in one_line_words(range(1, n + 1)):
        p = Permutation(word)
        successors[p], shapes[p] = _advance(kind, p)
    return DynamicsGraph(kind, n, successors, shapes)


class Census(NamedTuple):
    fixed_points: int
    two_cycles: int
    max_tail: int


def tail_and_cycle_lengths(
    graph: DynamicsGraph,
) -> tuple[dict[Permutation, int], dict[Permutation, int]]:
    """Distance to the terminal cycle and that cycle's length, for every node."""
    tail_length: dict[Permutation, int] = {}
    cycle_length: dict[Permutation, int] = {}
    for start in graph.successors:
        path: list[Permutation] = []
        position: dict[Permutation, int] = {}
        current = start
        while current not in tail_length and current not in position:
            position[current] = len(path)
            path.append(current)
            current = graph.successors[current]
        if current in position:
            # the walk closed a new cycle at path[entry:]
            entry = position[current]
            length = len(path) - entry
            base = 0
            for node in path[entry:]:
                tail_length[node] = 0
                cycle_length[node] = length
            path = path[:entry]
        else:
            # the walk ran into an already-solved node
            base = tail_length[current]
            length = cycle_length[current]
        for distance, node in enumerate(reversed(path), start=1):
            tail_length[node] = base + distance
            cycle_length[node] = length
    return tail_length, cycle_length


def cycles_of(graph: DynamicsGraph) -> list[tuple[Permutation, ...]]:
    """Every terminal cycle, each starting at its lexicographically least node."""
    tail_length, _ = tail_and_cycle_lengths(graph)
    on_cycle = {p for p, t in tail_length.items() if t == 0}
    cycles: list[tuple[Permutation, ...]] = []
    remaining = set(on_cycle)
    for p in graph.successors:  # lex order makes the output deterministic
        if p not in remaining:
            continue
        loop = [p]
        current = graph.successors[p]
        while current != p:
            loop.append(current)
            current = graph.successors[current]
        remaining.difference_update(loop)
        cycles.append(tuple(loop))
    return cycles


def census_of(graph: DynamicsGraph) -> Census:
    tail_length, cycle_length = tail_and_cycle_lengths(graph)
    fixed = sum(1 for p, q in graph.successors.items() if p == q)
    on_two_cycles = sum(
        1 for p in graph.successors if tail_length[p] == 0 and cycle_length[p] == 2
    )
    return Census(fixed, on_two_cycles // 2, max(tail_length.values()))


def census(kind: MapKind, n: int, bound: int = GRAPH_BOUND) -> Census:
    """Fixed points, 2-cycles, and the longest tail of the map on S_n."""
    return census_of(build_graph(kind, n, bound))


def expected_census(kind: MapKind, n: int) -> tuple[int, int]:
    """Predicted (fixed points, 2-cycles): one fixed point per shape for the
    row and column maps; for the reversed map one fixed point per partition
    into distinct odd parts and one 2-cycle per conjugate pair of shapes."""
    total = len(partitions_of(n))
    if kind is MapKind.R:
        fixed = len(partitions_distinct_odd(n))
        return fixed, (total - fixed) // 2
    return total, 0


def graph_to_dot(graph: DynamicsGraph) -> str:
    """Deterministic DOT text: one cluster per shape, then all edges in lex order."""
    lines = [f"digraph rsk_{graph.kind.value}_{graph.n} {{"]
    members: dict[Partition, list[Permutation]] = {
        shape: [] for shape in partitions_of(graph.n)
    }
    for p in graph.successors:
        members[graph.shapes[p]].append(p)
    for index, (shape, nodes) in enumerate(members.items()):
        lines.append(f"  subgraph cluster_{index} {{")
        lines.append(f'    label="{shape}";')
        for p in nodes:
            lines.append(f'    "{p}";')
        lines.append("  }")
    for p, q in graph.successors.items():
        lines.append(f'  "{p}" -> "{q}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: DynamicsGraph) -> str:
    payload = {
        "map": graph.kind.value,
        "n": graph.n,
        "shapes": {str(p): str(graph.shapes[p]) for p in graph.successors},
        "edges": {str(p): str(q) for p, q in graph.successors.items()},
    }
    return json.dumps(payload, indent=2) + "\n"


def orbit_to_json(report: OrbitReport) -> str:
    payload = {
        "tail": [str(p) for p in report.tail],
        "cycle": [str(p) for p in report.cycle],
        "shapes": [str(shape) for shape in report.shapes],
    }
    return json.dumps(payload, indent=2) + "\n"
