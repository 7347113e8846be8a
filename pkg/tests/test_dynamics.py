"""Iterated maps, their fixed points, and the functional graphs."""

import json
from itertools import permutations as one_line_words

import pytest

from rskdyn import (
    BoundExceeded,
    MapKind,
    Partition,
    Permutation,
    Tableau,
    UnsupportedMap,
    build_graph,
    census,
    column_reading_word,
    conjugate_partition,
    cycles_of,
    enumerate_syt,
    expected_census,
    fixed_point_for_shape,
    graph_to_dot,
    graph_to_json,
    is_self_conjugate,
    orbit,
    orbit_to_json,
    partitions_of,
    q_lambda,
    r_cycle_for_shape,
    reversed_reading_word,
    row_reading_word,
    rsk_forward,
    step,
    t_lambda,
    t_lambda_gravity,
)


def perm(text: str) -> Permutation:
    return Permutation.parse(text)


class TestTerminalTableaux:
    def test_layered_fill_example(self):
        assert t_lambda(Partition((4, 3, 2))) == Tableau(((1, 2, 5, 9), (3, 4, 8), (6, 7)))

    def test_single_row_and_square(self):
        assert t_lambda(Partition((5,))) == Tableau((tuple(range(1, 6)),))
        assert t_lambda(Partition((2, 2))) == Tableau(((1, 2), (3, 4)))

    def test_gravity_construction_agrees(self):
        for n in range(1, 11):
            for shape in partitions_of(n):
                assert t_lambda(shape) == t_lambda_gravity(shape)

    def test_column_consecutive_examples(self):
        assert q_lambda(Partition((4, 3))) == Tableau(((1, 3, 5, 7), (2, 4, 6)))
        assert q_lambda(Partition((3, 3, 1))) == Tableau(((1, 4, 6), (2, 5, 7), (3,)))
        assert q_lambda(Partition((1, 1, 1, 1))) == Tableau(((1,), (2,), (3,), (4,)))

    def test_recording_tableaux_are_constant_per_shape(self):
        # whatever the filling, each reading word always records the same tableau
        for n in range(1, 9):
            for shape in partitions_of(n):
                row_expected = t_lambda(shape)
                col_expected = q_lambda(shape)
                rev_expected = q_lambda(conjugate_partition(shape))
                for t in enumerate_syt(shape):
                    assert rsk_forward(row_reading_word(t)).recording == row_expected
                    assert rsk_forward(column_reading_word(t)).recording == col_expected
                    assert rsk_forward(reversed_reading_word(t)).recording == rev_expected


class TestStep:
    def test_row_map_examples(self):
        assert step(MapKind.F, perm("3,2,4,1")) == perm("4,2,1,3")
        assert step(MapKind.F, perm("3,2,1,4")) == perm("3,2,1,4")

    def test_reversed_map_examples(self):
        assert step(MapKind.R, perm("3,5,1,2,6,7,4")) == perm("6,5,2,1,7,4,3")
        assert step(MapKind.R, perm("3,1,4,2")) == perm("3,1,4,2")

    def test_shape_preserved_or_conjugated(self):
        for word in one_line_words(range(1, 6)):
            p = Permutation(word)
            shape = rsk_forward(p).shape
            assert rsk_forward(step(MapKind.F, p)).shape == shape
            assert rsk_forward(step(MapKind.C, p)).shape == shape
            assert rsk_forward(step(MapKind.R, p)).shape == conjugate_partition(shape)


class TestOrbit:
    def test_two_step_convergence_into_self_loop(self):
        report = orbit(MapKind.F, perm("3,2,4,1"))
        assert report.tail == (perm("3,2,4,1"), perm("4,2,1,3"))
        assert report.cycle == (perm("3,2,1,4"),)

    def test_identity_is_fixed_under_row_map(self):
        report = orbit(MapKind.F, perm("1,2,3,4"))
        assert report.tail == ()
        assert report.cycle == (perm("1,2,3,4"),)

    def test_identity_enters_two_cycle_under_reversed_map(self):
        report = orbit(MapKind.R, perm("1,2,3,4"))
        assert report.tail == ()
        assert report.cycle == (perm("1,2,3,4"), perm("4,3,2,1"))

    def test_reversed_map_worked_example(self):
        report = orbit(MapKind.R, perm("3,5,1,2,6,7,4"))
        assert report.tail == (perm("3,5,1,2,6,7,4"), perm("6,5,2,1,7,4,3"))
        assert report.cycle == (perm("5,1,6,2,7,3,4"), perm("7,5,3,1,6,4,2"))
        assert [str(s) for s in report.shapes] == ["4,3", "2,2,2,1", "4,3", "2,2,2,1"]

    def test_report_wiring(self):
        for text in ("3,2,4,1", "2,4,1,3", "3,5,1,2,6,7,4"):
            for kind in MapKind:
                report = orbit(kind, perm(text))
                if report.tail:
                    assert step(kind, report.tail[-1]) == report.cycle[0]
                assert step(kind, report.cycle[-1]) == report.cycle[0]
                assert len(report.shapes) == len(report.visited)
                assert len(set(report.visited)) == len(report.visited)

    def test_step_budget_validation(self):
        with pytest.raises(ValueError):
            orbit(MapKind.F, perm("2,1"), max_steps=3)


class TestFixedPoints:
    def test_row_map_examples(self):
        assert fixed_point_for_shape(MapKind.F, Partition((4, 3, 2))) == perm(
            "6,7,3,4,8,1,2,5,9"
        )
        assert fixed_point_for_shape(MapKind.F, Partition((2, 2))) == perm("3,4,1,2")

    def test_column_map_fixes_identity_on_single_rows(self):
        for n in (1, 4, 7):
            assert fixed_point_for_shape(MapKind.C, Partition((n,))) == Permutation.identity(n)

    def test_reversed_map_unsupported(self):
        with pytest.raises(UnsupportedMap):
            fixed_point_for_shape(MapKind.R, Partition((3, 1)))

    def test_fixed_points_are_fixed(self):
        for n in range(1, 8):
            for shape in partitions_of(n):
                for kind in (MapKind.F, MapKind.C):
                    fixed = fixed_point_for_shape(kind, shape)
                    assert step(kind, fixed) == fixed


class TestReversedCycles:
    def test_examples(self):
        assert r_cycle_for_shape(Partition((2, 2))) == (perm("3,1,4,2"),)
        assert r_cycle_for_shape(Partition((4,))) == (perm("1,2,3,4"), perm("4,3,2,1"))
        assert r_cycle_for_shape(Partition((3, 1))) == (perm("4,1,2,3"), perm("4,3,1,2"))

    def test_length_one_iff_self_conjugate(self):
        for n in range(1, 9):
            for shape in partitions_of(n):
                loop = r_cycle_for_shape(shape)
                assert (len(loop) == 1) == is_self_conjugate(shape)
                assert step(MapKind.R, loop[-1]) == loop[0]
                if len(loop) == 2:
                    assert step(MapKind.R, loop[0]) == loop[1]


class TestGraphAndCensus:
    def test_row_graph_on_s4(self):
        graph = build_graph(MapKind.F, 4)
        assert len(graph.successors) == 24
        loops = {p for p, q in graph.successors.items() if p == q}
        assert loops == {
            perm("1,2,3,4"),
            perm("2,1,3,4"),
            perm("3,4,1,2"),
            perm("3,2,1,4"),
            perm("4,3,2,1"),
        }

    def test_reversed_graph_on_s4(self):
        graph = build_graph(MapKind.R, 4)
        loops = [c for c in cycles_of(graph) if len(c) == 1]
        pairs = [c for c in cycles_of(graph) if len(c) == 2]
        assert loops == [(perm("3,1,4,2"),)]
        assert len(pairs) == 2

    def test_single_node_graph(self):
        graph = build_graph(MapKind.C, 1)
        assert graph.successors == {perm("1"): perm("1")}

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            build_graph(MapKind.F, 9)

    @pytest.mark.parametrize(
        "kind, n, expected",
        [
            (MapKind.F, 4, (5, 0)),
            (MapKind.C, 4, (5, 0)),
            (MapKind.R, 4, (1, 2)),
            (MapKind.R, 5, (1, 3)),
            (MapKind.R, 6, (1, 5)),
        ],
    )
    def test_census_counts(self, kind, n, expected):
        result = census(kind, n)
        assert (result.fixed_points, result.two_cycles) == expected
        assert result.max_tail <= 2
        assert expected_census(kind, n) == expected

    def test_no_nontrivial_cycles_for_row_and_column_maps(self):
        for kind in (MapKind.F, MapKind.C):
            for n in range(1, 6):
                assert all(len(c) == 1 for c in cycles_of(build_graph(kind, n)))


class TestSerialization:
    def test_dot_is_deterministic(self):
        first = graph_to_dot(build_graph(MapKind.F, 4))
        second = graph_to_dot(build_graph(MapKind.F, 4))
        assert first == second
        assert '"3,2,1,4" -> "3,2,1,4";' in first
        assert 'label="2,2";' in first

    def test_json_graph_round_trips_edges(self):
        graph = build_graph(MapKind.R, 3)
        payload = json.loads(graph_to_json(graph))
        assert payload["map"] == "r"
        assert payload["n"] == 3
        assert len(payload["edges"]) == 6
        for source, target in payload["edges"].items():
            assert graph.successors[perm(source)] == perm(target)

    def test_orbit_json_schema(self):
        payload = json.loads(orbit_to_json(orbit(MapKind.R, perm("3,5,1,2,6,7,4"))))
        assert payload["tail"] == ["3,5,1,2,6,7,4", "6,5,2,1,7,4,3"]
        assert payload["cycle"] == ["5,1,6,2,7,3,4", "7,5,3,1,6,4,2"]
        assert payload["shapes"] == ["4,3", "2,2,2,1", "4,3", "2,2,2,1"]
