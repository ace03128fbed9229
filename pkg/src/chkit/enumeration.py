"""Isomorph-free exhaustive generation of small orgraphs.

Graphs are generated level by level: every representative on m vertices is
extended by one new vertex in all 3^m ways (for each old vertex: no edge,
edge in, or edge out), children violating a hereditary constraint are
pruned immediately, and the survivors are deduplicated by canonical key so
exactly one canonically labeled representative per isomorphism class
remains.  Triangle-freeness and induced-pattern-freeness are hereditary
and participate in pruning; a minimum-outdegree constraint is not and is
applied only at the target size.

Levels are embarrassingly parallel: the parents of a level can be split
among worker processes and the children dictionaries merged, which cannot
change the result set.  Output order is always sorted canonical key, so
runs with different ``jobs`` values are byte-identical.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .orgraph import Orgraph, _bits
from .patterns import CH3_FORBIDDEN, Pattern
from .verifier import ClaimReport, run_all_claims

__all__ = [
    "DEFAULT_MAX_N",
    "EnumConstraints",
    "enumerate_classes",
    "levels_up_to",
    "LevelSummary",
    "CHVerificationReport",
    "verify_ch_up_to",
    "ClaimLevelSummary",
    "ClaimSuiteReport",
    "verify_claims_up_to",
    "search_counterexample",
]

#: Size cap for exhaustive generation; single classes stay cheap well past
#: this, but full levels grow steeply (the CLI can override via CHKIT_MAX_N).
DEFAULT_MAX_N = 8


@dataclass(frozen=True)
class EnumConstraints:
    """What to generate: size plus hereditary and final filters."""

    n: int
    require_c3_free: bool = False
    forbidden_induced: tuple[Pattern, ...] = ()
    min_out_degree: int | None = None


def _pattern_keys(patterns: tuple[Pattern, ...]) -> dict[int, set[tuple]]:
    """Canonical keys of the forbidden patterns, grouped by size."""
    by_size: dict[int, set[tuple]] = {}
    for p in patterns:
        by_size.setdefault(p.size, set()).add(p.graph.canonical_key())
    return by_size


def _extend_parent(
    parent: Orgraph,
    require_c3_free: bool,
    forbidden_by_size: dict[int, set[tuple]],
) -> dict[tuple, tuple[int, ...]]:
    """All admissible one-vertex extensions of ``parent``.

    Returns {canonical key: canonical out-mask rows}.  Only constraints
    involving the new vertex are rechecked; the parent already satisfies
    everything hereditary.
    """
    m = parent.n
    x = m
    children: dict[tuple, tuple[int, ...]] = {}
    in_masks = [parent.in_mask(v) for v in range(m)]
    for trits in itertools.product((0, 1, 2), repeat=m):
        out_to = 0
        in_from = 0
        for v, t in enumerate(trits):
            if t == 1:
                in_from |= 1 << v
            elif t == 2:
                out_to |= 1 << v
        if require_c3_free and any(out_to & in_masks[v] for v in _bits(in_from)):
            continue
        child = parent.add_vertex(out_to=out_to, in_from=in_from)
        if forbidden_by_size and _new_vertex_hits_pattern(child, x, forbidden_by_size):
            continue
        key = child.canonical_key()
        if key not in children:
            children[key] = key[1]
    return children


def _new_vertex_hits_pattern(
    child: Orgraph, x: int, forbidden_by_size: dict[int, set[tuple]]
) -> bool:
    """Does some induced subgraph through vertex x match a forbidden key?"""
    others = [v for v in range(child.n) if v != x]
    for size, keys in forbidden_by_size.items():
        if size > child.n:
            continue
        for rest in itertools.combinations(others, size - 1):
            subset = child.induced_subgraph(rest + (x,))
            if subset.canonical_key() in keys:
                return True
    return False


def _extend_chunk(args) -> dict[tuple, tuple[int, ...]]:
    """Worker entry point: extend a chunk of parents given as raw rows."""
    parent_rows, require_c3_free, forbidden_rows = args
    forbidden_by_size = _pattern_keys(
        tuple(
            Pattern(f"f{i}", Orgraph(len(rows), list(rows)))
            for i, rows in enumerate(forbidden_rows)
        )
    )
    merged: dict[tuple, tuple[int, ...]] = {}
    for rows in parent_rows:
        parent = Orgraph(len(rows), list(rows))
        merged.update(_extend_parent(parent, require_c3_free, forbidden_by_size))
    return merged


def levels_up_to(
    n_max: int,
    require_c3_free: bool = False,
    forbidden_induced: tuple[Pattern, ...] = (),
    jobs: int = 1,
    max_n: int = DEFAULT_MAX_N,
) -> dict[int, list[Orgraph]]:
    """Representatives of every class at sizes 1..n_max, canonically labeled.

    All representatives satisfy the hereditary constraints; each level's
    list is sorted by canonical key.
    """
    if n_max < 1:
        raise ValueError(f"need n >= 1, got {n_max}")
    if n_max > max_n:
        raise ValueError(
            f"exhaustive generation capped at {max_n} vertices, asked for {n_max}"
        )
    forbidden_by_size = _pattern_keys(forbidden_induced)
    forbidden_rows = tuple(
        tuple(p.graph.out_mask(v) for v in range(p.size)) for p in forbidden_induced
    )
    levels: dict[int, list[Orgraph]] = {1: [Orgraph(1, [0])]}
    current = levels[1]
    for m in range(1, n_max):
        if jobs > 1 and len(current) >= 4 * jobs:
            chunks = [current[i::jobs] for i in range(jobs)]
            merged: dict[tuple, tuple[int, ...]] = {}
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                work = [
                    (
                        [tuple(g.out_mask(v) for v in range(g.n)) for g in chunk],
                        require_c3_free,
                        forbidden_rows,
                    )
                    for chunk in chunks
                ]
                for result in pool.map(_extend_chunk, work):
                    merged.update(result)
        else:
            merged = {}
            for parent in current:
                merged.update(
                    _extend_parent(parent, require_c3_free, forbidden_by_size)
                )
        current = [Orgraph(m + 1, list(merged[key])) for key in sorted(merged)]
        levels[m + 1] = current
    return levels


def enumerate_classes(
    constraints: EnumConstraints, jobs: int = 1, max_n: int = DEFAULT_MAX_N
) -> list[Orgraph]:
    """One canonically labeled representative per class meeting the
    constraints, sorted by canonical key."""
    levels = levels_up_to(
        constraints.n,
        constraints.require_c3_free,
        constraints.forbidden_induced,
        jobs=jobs,
        max_n=max_n,
    )
    result = levels[constraints.n]
    if constraints.min_out_degree is not None:
        bound = constraints.min_out_degree
        result = [g for g in result if g.min_out_degree() >= bound]
    return result


# ---- whole-range verification sweeps ----


@dataclass
class LevelSummary:
    n: int
    class_count: int
    extremal: list[Orgraph] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "class_count": self.class_count,
            "extremal_count": len(self.extremal),
        }


@dataclass
class CHVerificationReport:
    """Outcome of checking the outdegree bound on every triangle-free class."""

    levels: dict[int, LevelSummary]
    failures: list[Orgraph]

    @property
    def all_pass(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "levels": [self.levels[n].to_dict() for n in sorted(self.levels)],
            "failures": [g.edges() for g in self.failures],
            "all_pass": self.all_pass,
        }


def verify_ch_up_to(
    n_max: int, jobs: int = 1, max_n: int = DEFAULT_MAX_N
) -> CHVerificationReport:
    """Check 3 * min outdegree <= n - 1 on every triangle-free class with
    n <= n_max; collect the extremal classes (equality, so n = 3h+1)."""
    levels = levels_up_to(n_max, require_c3_free=True, jobs=jobs, max_n=max_n)
    summaries: dict[int, LevelSummary] = {}
    failures: list[Orgraph] = []
    for n in sorted(levels):
        extremal = []
        for g in levels[n]:
            if 3 * g.min_out_degree() > n - 1:
                failures.append(g)
            elif 3 * g.min_out_degree() == n - 1:
                extremal.append(g)
        summaries[n] = LevelSummary(n, len(levels[n]), extremal)
    return CHVerificationReport(summaries, failures)


@dataclass
class ClaimLevelSummary:
    n: int
    class_count: int
    instances: dict[str, int]
    non_vacuous: dict[str, int]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "class_count": self.class_count,
            "instances": dict(self.instances),
            "non_vacuous": dict(self.non_vacuous),
        }


@dataclass
class ClaimSuiteReport:
    """Aggregate of all claim checkers over the pattern-free corpus."""

    levels: dict[int, ClaimLevelSummary]
    violations: list[tuple[Orgraph, ClaimReport]]

    @property
    def all_pass(self) -> bool:
        return not self.violations

    def instances_total(self, claim: str) -> int:
        return sum(level.instances.get(claim, 0) for level in self.levels.values())

    def to_dict(self) -> dict:
        return {
            "levels": [self.levels[n].to_dict() for n in sorted(self.levels)],
            "violation_count": len(self.violations),
            "all_pass": self.all_pass,
        }


def verify_claims_up_to(
    n_max: int, n_min: int = 4, jobs: int = 1, max_n: int = DEFAULT_MAX_N
) -> ClaimSuiteReport:
    """Run every claim checker on every triangle-free, pattern-free class
    with n_min <= n <= n_max and aggregate instance counts."""
    levels = levels_up_to(
        n_max, require_c3_free=True, forbidden_induced=CH3_FORBIDDEN, jobs=jobs, max_n=max_n
    )
    summaries: dict[int, ClaimLevelSummary] = {}
    violations: list[tuple[Orgraph, ClaimReport]] = []
    for n in sorted(levels):
        if n < n_min:
            continue
        instances: dict[str, int] = {}
        non_vacuous: dict[str, int] = {}
        for g in levels[n]:
            for report in run_all_claims(g):
                instances[report.claim] = (
                    instances.get(report.claim, 0) + report.instances
                )
                if report.instances:
                    non_vacuous[report.claim] = non_vacuous.get(report.claim, 0) + 1
                if not report.passed:
                    violations.append((g, report))
        summaries[n] = ClaimLevelSummary(n, len(levels[n]), instances, non_vacuous)
    return ClaimSuiteReport(summaries, violations)


def search_counterexample(
    n: int,
    patterns: tuple[Pattern, ...] = CH3_FORBIDDEN,
    jobs: int = 1,
    max_n: int = DEFAULT_MAX_N,
) -> Orgraph | None:
    """First triangle-free class avoiding only ``patterns`` whose minimum
    outdegree beats (n-1)/3, or None when no such class exists."""
    classes = enumerate_classes(
        EnumConstraints(n=n, require_c3_free=True, forbidden_induced=tuple(patterns)),
        jobs=jobs,
        max_n=max_n,
    )
    for g in classes:
        if 3 * g.min_out_degree() > n - 1:
            return g
    return None
