"""Command-line interface.

Exit codes: 0 success or property verified, 1 a checked property failed or
a counterexample was found, 2 input or usage error.  Verification
subcommands end with a machine-readable ``RESULT <pass|fail> <details>``
line; graphs go to stdout in the text format, diagnostics to stderr.
Rational values print exactly in lowest terms, never as decimals.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .augment import AUGMENTED_BY_NAME
from .constructions import (
    TreeSpec,
    TreeSpecError,
    circulant,
    from_tree_spec,
    is_uniform,
    lex_product,
)
from .enumeration import (
    DEFAULT_MAX_N,
    EnumConstraints,
    enumerate_classes,
    search_counterexample,
    verify_ch_up_to,
    verify_claims_up_to,
)
from .flags import (
    FLAGS_BY_NAME,
    EmptySampleSpaceError,
    FlagError,
    relative_density,
)
from .orgraph import GraphTextError, Orgraph, OrgraphError
from .patterns import CH3_FORBIDDEN, PATTERNS, contains_induced
from .verifier import CLAIM_CHECKS, is_c4_saturated, run_all_claims

__all__ = ["main"]


def _read_graph(path: str) -> Orgraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise GraphTextError(f"cannot read {path}: {exc}") from exc
    return Orgraph.from_text(text)


def _emit_graph(graph: Orgraph, comments: list[str] | None = None) -> None:
    lines = graph.to_text().splitlines()
    out = [lines[0]]
    if comments:
        out.extend(f"# {c}" for c in comments)
    out.extend(lines[1:])
    print("\n".join(out))


def _max_n() -> int:
    raw = os.environ.get("CHKIT_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"CHKIT_MAX_N must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"CHKIT_MAX_N must be >= 1, got {value}")
    return value


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.what == "circulant":
        if args.h < 1:
            return _usage_error(f"--h must be >= 1, got {args.h}")
        _emit_graph(circulant(args.h))
        return 0
    if args.what == "lexprod":
        outer = _read_graph(args.outer)
        inner = _read_graph(args.inner)
        _emit_graph(lex_product(outer, inner))
        return 0
    # tree
    if args.spec == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.spec).read_text()
        except OSError as exc:
            return _usage_error(f"cannot read {args.spec}: {exc}")
    spec = TreeSpec.from_text(text)
    weighted = from_tree_spec(spec)
    if args.require_uniform and not is_uniform(weighted):
        print("tree spec is not uniform", file=sys.stderr)
        return 1
    comments = [
        f"weight {v} {weighted.weights[v]}" for v in range(weighted.graph.n)
    ]
    _emit_graph(weighted.graph, comments)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    n = graph.n
    min_od = graph.min_out_degree() if n else 0
    bound = Fraction(n - 1, 3) if n else Fraction(0)
    c3_free = graph.is_c3_free()
    ch_holds = c3_free and 3 * min_od <= n - 1
    print(f"n {n}")
    print(f"edges {graph.edge_count}")
    print(f"min_outdegree {min_od}")
    print(f"bound {bound}")
    print(f"c3_free {str(c3_free).lower()}")
    for pattern in PATTERNS:
        found = contains_induced(graph, pattern)
        print(f"pattern {pattern.name} {str(found).lower()}")
    print(f"ch {'holds' if ch_holds else 'violated' if c3_free else 'not-applicable'}")
    ok = c3_free and ch_holds
    detail = f"n={n} min_outdegree={min_od} bound={bound} c3_free={str(c3_free).lower()}"
    print(f"RESULT {'pass' if ok else 'fail'} {detail}")
    return 0 if ok else 1


def _cmd_density(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    flag = FLAGS_BY_NAME[args.flag]
    try:
        labels = tuple(int(part) for part in args.labels.split(","))
    except ValueError:
        return _usage_error(f"--labels must be comma-separated integers, got {args.labels!r}")
    try:
        value = relative_density(flag, graph, labels)
    except EmptySampleSpaceError as exc:
        return _usage_error(str(exc))
    except FlagError as exc:
        return _usage_error(str(exc))
    print(value)
    return 0


def _cmd_claims(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    if args.claim is not None:
        reports = [CLAIM_CHECKS[args.claim](graph)]
    else:
        reports = run_all_claims(graph)
    if not reports[0].preconditions_ok:
        print(
            f"claims not applicable: {reports[0].precondition_reason}",
            file=sys.stderr,
        )
        return 2
    total_instances = 0
    total_violations = 0
    for report in reports:
        print(json.dumps(report.to_dict()))
        total_instances += report.instances
        total_violations += len(report.violations)
    ok = total_violations == 0
    detail = f"claims={len(reports)} instances={total_instances} violations={total_violations}"
    print(f"RESULT {'pass' if ok else 'fail'} {detail}")
    return 0 if ok else 1


def _cmd_augment(args: argparse.Namespace) -> int:
    name = args.pattern if args.pattern.startswith("aug-") else f"aug-{args.pattern}"
    augmented = AUGMENTED_BY_NAME[name]
    added = " ".join(str(v) for v in augmented.added_indices)
    _emit_graph(augmented.graph, [f"added: {added}"])
    return 0


def _cmd_saturated(args: argparse.Namespace) -> int:
    graph = _read_graph(args.graph)
    ok = is_c4_saturated(graph)
    print(f"RESULT {'pass' if ok else 'fail'} c4_saturated={str(ok).lower()}")
    return 0 if ok else 1


def _cmd_enumerate(args: argparse.Namespace) -> int:
    max_n = _max_n()
    if args.verify_ch or args.verify_claims:
        ok = True
        details = []
        if args.verify_ch:
            report = verify_ch_up_to(args.n, jobs=args.jobs, max_n=max_n)
            for n in sorted(report.levels):
                level = report.levels[n]
                print(
                    f"n {n} classes {level.class_count} extremal {len(level.extremal)}",
                    file=sys.stderr,
                )
            ok = ok and report.all_pass
            details.append(f"ch={'pass' if report.all_pass else 'fail'}")
        if args.verify_claims:
            report = verify_claims_up_to(args.n, jobs=args.jobs, max_n=max_n)
            for n in sorted(report.levels):
                level = report.levels[n]
                print(
                    f"n {n} classes {level.class_count} instances "
                    f"{sum(level.instances.values())}",
                    file=sys.stderr,
                )
            ok = ok and report.all_pass
            details.append(
                f"claims={'pass' if report.all_pass else 'fail'} "
                f"violations={len(report.violations)}"
            )
        print(f"RESULT {'pass' if ok else 'fail'} {' '.join(details)}")
        return 0 if ok else 1
    constraints = EnumConstraints(
        n=args.n,
        require_c3_free=args.c3_free,
        forbidden_induced=CH3_FORBIDDEN if args.pattern_free else (),
    )
    classes = enumerate_classes(constraints, jobs=args.jobs, max_n=max_n)
    for i, graph in enumerate(classes):
        if i:
            print()
        print(graph.to_text(), end="")
    print(f"n {args.n} classes {len(classes)}", file=sys.stderr)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    max_n = _max_n()
    dropped = set(args.drop_pattern or [])
    patterns = tuple(p for p in CH3_FORBIDDEN if p.name not in dropped)
    found = search_counterexample(args.n, patterns=patterns, max_n=max_n)
    kept = ",".join(p.name for p in patterns) or "none"
    if found is None:
        print(f"RESULT pass no_counterexample n={args.n} patterns={kept}")
        return 0
    _emit_graph(found)
    print(f"RESULT fail counterexample n={args.n} patterns={kept}")
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chkit",
        description="Build, measure, and exhaustively verify small orgraphs "
        "around the Caccetta-Haggkvist outdegree bound.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="emit an extremal construction")
    csub = construct.add_subparsers(dest="what", required=True)
    circ = csub.add_parser("circulant", help="circulant on 3h+1 vertices")
    circ.add_argument("--h", type=int, required=True, help="out-neighbour radius")
    lexp = csub.add_parser("lexprod", help="lexicographic product of two graphs")
    lexp.add_argument("outer", help="outer graph file, or - for stdin")
    lexp.add_argument("inner", help="inner graph file")
    tree = csub.add_parser("tree", help="graph of a TreeSpec file with weights")
    tree.add_argument("spec", help="TreeSpec file, or - for stdin")
    tree.add_argument(
        "--require-uniform",
        action="store_true",
        help="fail unless all leaf weights are equal",
    )
    construct.set_defaults(func=_cmd_construct)

    check = sub.add_parser("check", help="report degrees, girth bound, patterns")
    check.add_argument("graph", help="graph file, or - for stdin")
    check.set_defaults(func=_cmd_check)

    density = sub.add_parser("density", help="exact flag density at given labels")
    density.add_argument("graph", help="graph file, or - for stdin")
    density.add_argument(
        "--flag", required=True, choices=sorted(FLAGS_BY_NAME), help="flag name"
    )
    density.add_argument(
        "--labels", required=True, help="comma-separated label vertices, e.g. 0,1"
    )
    density.set_defaults(func=_cmd_density)

    claims = sub.add_parser("claims", help="run claim checkers on a graph")
    claims.add_argument("graph", help="graph file, or - for stdin")
    claims.add_argument(
        "--claim", choices=sorted(CLAIM_CHECKS), help="run only this claim"
    )
    claims.set_defaults(func=_cmd_claims)

    augment = sub.add_parser("augment", help="emit an augmented forbidden pattern")
    base_names = [name.removeprefix("aug-") for name in AUGMENTED_BY_NAME]
    augment.add_argument(
        "--pattern", required=True, choices=sorted([*AUGMENTED_BY_NAME, *base_names])
    )
    augment.set_defaults(func=_cmd_augment)

    saturated = sub.add_parser("saturated", help="test 4-cycle saturation")
    saturated.add_argument("graph", help="graph file, or - for stdin")
    saturated.set_defaults(func=_cmd_saturated)

    enum = sub.add_parser("enumerate", help="isomorph-free exhaustive generation")
    enum.add_argument("--n", type=int, required=True, help="number of vertices")
    enum.add_argument("--c3-free", action="store_true", help="triangle-free only")
    enum.add_argument(
        "--pattern-free",
        action="store_true",
        help="exclude graphs with an induced forbidden pattern",
    )
    enum.add_argument(
        "--verify-ch",
        action="store_true",
        help="check the outdegree bound on every class up to n",
    )
    enum.add_argument(
        "--verify-claims",
        action="store_true",
        help="run all claim checkers on every pattern-free class up to n",
    )
    enum.add_argument("--jobs", type=int, default=1, help="parallel workers")
    enum.set_defaults(func=_cmd_enumerate)

    search = sub.add_parser("search", help="look for a bound-violating class")
    search.add_argument("--n", type=int, required=True, help="number of vertices")
    search.add_argument(
        "--drop-pattern",
        action="append",
        choices=sorted(p.name for p in CH3_FORBIDDEN),
        help="remove a pattern from the forbidden set (repeatable)",
    )
    search.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphTextError, OrgraphError, TreeSpecError, ValueError) as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
