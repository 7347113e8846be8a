"""Command-line interface.

Exit codes: 0 on success, 1 when a verification command finds a falsified
property, 2 on unusable input or flags.
"""

from __future__ import annotations

import argparse
import sys

from .core import BoundExceeded, Partition, Permutation
from .dynamics import (
    GRAPH_BOUND,
    MapKind,
    NoCycleWithinBound,
    build_graph,
    census_of,
    expected_census,
    fixed_point_for_shape,
    graph_to_dot,
    graph_to_json,
    orbit,
    orbit_to_json,
    q_lambda,
    t_lambda,
)
from .rsk import rsk_forward, rsk_trace
from .verify import MAX_VERIFY_SIZE, run_suite


class UsageError(Exception):
    """Bad values inside otherwise well-formed arguments."""


def _parse_permutation(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_partition(text: str) -> Partition:
    try:
        shape = Partition.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not shape.parts:
        raise UsageError("partition must have at least one part")
    return shape


def cmd_rsk(args: argparse.Namespace) -> int:
    p = _parse_permutation(args.perm)
    if args.trace:
        for number, (insertion, recording) in enumerate(rsk_trace(p), start=1):
            print(f"step {number}: {insertion} | {recording}")
    print(rsk_forward(p))
    return 0


def cmd_orbit(args: argparse.Namespace) -> int:
    p = _parse_permutation(args.perm)
    report = orbit(MapKind(args.map), p)
    if args.json:
        print(orbit_to_json(report), end="")
        return 0
    shapes = iter(report.shapes)
    for index, node in enumerate(report.tail, start=1):
        print(f"tail  {index}: {node}  shape {next(shapes)}")
    for index, node in enumerate(report.cycle, start=1):
        print(f"cycle {index}: {node}  shape {next(shapes)}")
    return 0


def cmd_graph(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= GRAPH_BOUND:
        raise UsageError(f"--n must be between 1 and {GRAPH_BOUND}")
    graph = build_graph(MapKind(args.map), args.n)
    text = graph_to_dot(graph) if args.format == "dot" else graph_to_json(graph)
    print(text, end="")
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= GRAPH_BOUND:
        raise UsageError(f"--n must be between 1 and {GRAPH_BOUND}")
    kind = MapKind(args.map)
    result = census_of(build_graph(kind, args.n))
    fixed, two = expected_census(kind, args.n)
    print(f"map {kind.value} on S_{args.n}")
    print(f"fixed points: {result.fixed_points} (expected {fixed})")
    print(f"2-cycles: {result.two_cycles} (expected {two})")
    print(f"max tail: {result.max_tail} (bound 2)")
    if result.fixed_points != fixed or result.two_cycles != two or result.max_tail > 2:
        print("MISMATCH: counts disagree with the partition formulas")
        return 1
    print("counts match")
    return 0


def cmd_fixed_point(args: argparse.Namespace) -> int:
    shape = _parse_partition(args.partition)
    kind = MapKind(args.map)
    tableau = t_lambda(shape) if kind is MapKind.F else q_lambda(shape)
    print(f"tableau: {tableau}")
    print(f"permutation: {fixed_point_for_shape(kind, shape)}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= MAX_VERIFY_SIZE:
        raise UsageError(f"--n must be between 1 and {MAX_VERIFY_SIZE}")
    results = run_suite(args.n, seed=args.seed)
    for result in results:
        print(result.line())
    failures = sum(1 for result in results if not result.passed)
    print(f"{len(results) - failures}/{len(results)} checks passed (n={args.n}, seed={args.seed})")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rskdyn",
        description="Row insertion on permutations and iterated reading-word dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rsk = sub.add_parser("rsk", help="insert a permutation and print its tableau pair")
    p_rsk.add_argument("perm", help="one-line notation, e.g. 2,4,7,3,5,1,6,8")
    p_rsk.add_argument("--trace", action="store_true", help="print every insertion step")
    p_rsk.set_defaults(func=cmd_rsk)

    p_orbit = sub.add_parser("orbit", help="iterate a map until its trajectory repeats")
    p_orbit.add_argument("--map", required=True, choices=[k.value for k in MapKind])
    p_orbit.add_argument("--json", action="store_true", help="emit the JSON report")
    p_orbit.add_argument("perm")
    p_orbit.set_defaults(func=cmd_orbit)

    p_graph = sub.add_parser("graph", help="export the full functional graph on S_n")
    p_graph.add_argument("--map", required=True, choices=[k.value for k in MapKind])
    p_graph.add_argument("--n", required=True, type=int)
    p_graph.add_argument("--format", default="dot", choices=["dot", "json"])
    p_graph.set_defaults(func=cmd_graph)

    p_census = sub.add_parser("census", help="count fixed points, 2-cycles, and tails on S_n")
    p_census.add_argument("--map", required=True, choices=[k.value for k in MapKind])
    p_census.add_argument("--n", required=True, type=int)
    p_census.set_defaults(func=cmd_census)

    p_fixed = sub.add_parser(
        "fixed-point", help="the terminal tableau and permutation for a shape"
    )
    p_fixed.add_argument("--map", required=True, choices=[MapKind.F.value, MapKind.C.value])
    p_fixed.add_argument("partition", help="comma-separated parts, e.g. 4,3,2")
    p_fixed.set_defaults(func=cmd_fixed_point)

    p_verify = sub.add_parser("verify", help="run the full verification suite")
    p_verify.add_argument("--n", required=True, type=int, help="largest permutation size")
    p_verify.add_argument("--seed", default=0, type=int, help="seed for the sampled sizes")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BoundExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NoCycleWithinBound as exc:
        # a trajectory that fails to repeat falsifies the convergence bound
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
