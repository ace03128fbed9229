"""Critical edges and the checkable claims behind the outdegree bound.

For a vertex v with out-neighborhood A(v), an edge v->w is *critical* when
w minimizes, over A(v), the number of common out-neighbors with v; that is
the same as having minimal outdegree inside the induced subgraph on A(v).
Chains of critical edges drive every claim in this module.

Each ``check_*`` function sweeps all instances of its claim's hypotheses in
a host graph and returns a :class:`ClaimReport`.  A report distinguishes
three outcomes: preconditions not met (the claim says nothing about this
graph), pass (zero violations over however many instances), and fail
(violations listed with witnesses).  Checkers never raise on a false
claim; they only raise on malformed inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .orgraph import Orgraph, _bits
from .patterns import CH3_FORBIDDEN, TWISTED_CIRCLE, contains_induced
from .flags import (
    I_A,
    K21_A,
    O_A,
    OHAT_A,
    P3_A,
    relative_density,
    witnesses,
)

__all__ = [
    "PreconditionError",
    "BoundGuaranteeError",
    "VertexCriticalInfo",
    "CriticalEdgeReport",
    "critical_successors",
    "critical_edge_report",
    "critical_edges",
    "find_critical_cycle",
    "cycle_alpha_report",
    "Violation",
    "ClaimReport",
    "check_ohat_zero",
    "check_p3a_positive",
    "check_path_independence",
    "check_k21n_zero",
    "check_oa_p3n_bound",
    "per_vertex_contribution",
    "check_alpha_sum",
    "alpha_sum_lhs",
    "CLAIM_CHECKS",
    "run_all_claims",
    "is_c4_saturated",
    "check_ch",
    "find_low_outdegree_vertex",
]


class PreconditionError(ValueError):
    """An operation was called on a graph violating its stated hypotheses."""


class BoundGuaranteeError(RuntimeError):
    """No vertex meets the guaranteed outdegree bound.

    On a triangle-free graph with none of the forbidden patterns this
    cannot happen; seeing it means the caller broke a precondition or the
    implementation is wrong, so it is an error rather than a result.
    """


def alpha(graph: Orgraph, v: int) -> Fraction:
    """Normalized outdegree outdegree(v) / (n - 1)."""
    if graph.n < 2:
        raise PreconditionError("alpha needs at least two vertices")
    return Fraction(graph.out_degree(v), graph.n - 1)


# ---- critical edges ----


def critical_successors(graph: Orgraph, v: int) -> tuple[int, ...]:
    """Out-neighbors of v minimizing the common out-neighborhood with v.

    Equivalently: the vertices of minimal outdegree in the subgraph induced
    on A(v).  Empty iff v has no out-edges.
    """
    a_mask = graph.out_mask(v)
    if not a_mask:
        return ()
    best: list[int] = []
    best_count: int | None = None
    for w in _bits(a_mask):
        count = (graph.out_mask(w) & a_mask).bit_count()
        if best_count is None or count < best_count:
            best = [w]
            best_count = count
        elif count == best_count:
            best.append(w)
    return tuple(best)


@dataclass(frozen=True)
class VertexCriticalInfo:
    vertex: int
    out_neighbors: tuple[int, ...]
    critical: tuple[int, ...]


@dataclass(frozen=True)
class CriticalEdgeReport:
    entries: tuple[VertexCriticalInfo, ...]

    def critical_of(self, v: int) -> tuple[int, ...]:
        return self.entries[v].critical


def critical_edge_report(graph: Orgraph) -> CriticalEdgeReport:
    """Out-neighborhood and critical successors of every vertex."""
    return CriticalEdgeReport(
        tuple(
            VertexCriticalInfo(v, graph.out_neighbors(v), critical_successors(graph, v))
            for v in range(graph.n)
        )
    )


def critical_edges(graph: Orgraph) -> list[tuple[int, int]]:
    """All critical edges (v, w), sorted."""
    return [
        (v, w) for v in range(graph.n) for w in critical_successors(graph, v)
    ]


def find_critical_cycle(graph: Orgraph) -> list[int]:
    """Deterministic cycle of critical edges.

    Starting from vertex 0, repeatedly follow the smallest-index critical
    successor until a vertex repeats; the cycle portion of the walk is
    returned.  Requires a triangle-free graph in which every vertex has an
    out-edge (so the walk can never stall).
    """
    if graph.n == 0:
        raise PreconditionError("empty graph has no cycles")
    if not graph.is_c3_free():
        raise PreconditionError("graph contains a directed triangle")
    for v in range(graph.n):
        if graph.out_degree(v) == 0:
            raise PreconditionError(f"vertex {v} has no out-edge")
    walk = [0]
    seen = {0: 0}
    while True:
        nxt = critical_successors(graph, walk[-1])[0]
        if nxt in seen:
            return walk[seen[nxt]:]
        seen[nxt] = len(walk)
        walk.append(nxt)


def cycle_alpha_report(graph: Orgraph, cycle: list[int]) -> tuple[Fraction, int]:
    """Sum of alpha over a directed cycle, plus the argmin vertex.

    The alpha sum is a diagnostic: it can exceed len(cycle)/3 on graphs
    containing forbidden patterns, so nothing here asserts a bound.
    """
    if len(cycle) < 3:
        raise PreconditionError("a directed cycle has at least three vertices")
    if len(set(cycle)) != len(cycle):
        raise PreconditionError("cycle vertices must be distinct")
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        if not graph.has_edge(v, w):
            raise PreconditionError(f"({v}, {w}) is not an edge")
    total = sum((alpha(graph, v) for v in cycle), Fraction(0))
    lowest = min(cycle, key=lambda v: (graph.out_degree(v), v))
    return total, lowest


# ---- claim reports ----


@dataclass(frozen=True)
class Violation:
    """One failed instance: the hypothesis vertices plus an optional witness."""

    labels: tuple[int, ...]
    witness: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "witness": None if self.witness is None else list(self.witness),
        }


@dataclass
class ClaimReport:
    """Outcome of sweeping one claim over a graph.

    ``instances`` counts hypothesis-satisfying instances actually checked,
    so a pass with zero instances is visible as vacuous.  When
    ``preconditions_ok`` is false the claim was not evaluated at all and
    ``precondition_reason`` says why.
    """

    claim: str
    instances: int
    violations: list[Violation]
    preconditions_ok: bool = True
    precondition_reason: str | None = None
    details: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.preconditions_ok and not self.violations

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "instances": self.instances,
            "violations": [v.to_dict() for v in self.violations],
            "preconditions_ok": self.preconditions_ok,
            "precondition_reason": self.precondition_reason,
            "details": dict(self.details),
        }


def _precondition_reason(graph: Orgraph) -> str | None:
    """Shared hypotheses of all claims: n >= 4, triangle-free, pattern-free."""
    if graph.n < 4:
        return f"need at least 4 vertices, got {graph.n}"
    if not graph.is_c3_free():
        return "graph contains a directed triangle"
    for pattern in CH3_FORBIDDEN:
        if contains_induced(graph, pattern):
            return f"graph contains an induced {pattern.name}"
    return None


def _skipped(claim: str, reason: str) -> ClaimReport:
    return ClaimReport(claim, 0, [], preconditions_ok=False, precondition_reason=reason)


def _critical_triples(graph: Orgraph):
    """All (u, v, w) with u->v and v->w both critical."""
    report = critical_edge_report(graph)
    for u in range(graph.n):
        for v in report.critical_of(u):
            for w in report.critical_of(v):
                yield u, v, w


# ---- the six claims ----


def check_ohat_zero(graph: Orgraph) -> ClaimReport:
    """On every critical edge (v, w) the flag ohat_a has density zero."""
    reason = _precondition_reason(graph)
    if reason:
        return _skipped("ohat-zero", reason)
    instances = 0
    violations = []
    for v, w in critical_edges(graph):
        instances += 1
        if relative_density(OHAT_A, graph, (v, w)) != 0:
            found = witnesses(OHAT_A, graph, (v, w))
            violations.append(Violation((v, w), found[0] if found else None))
    return ClaimReport("ohat-zero", instances, violations)


def check_p3a_positive(graph: Orgraph) -> ClaimReport:
    """On critical (v, w) with 3*outdegree(w) > n-1 the flag p3_a is present."""
    reason = _precondition_reason(graph)
    if reason:
        return _skipped("p3a-positive", reason)
    n = graph.n
    instances = 0
    violations = []
    for v, w in critical_edges(graph):
        if 3 * graph.out_degree(w) <= n - 1:
            continue
        instances += 1
        if relative_density(P3_A, graph, (v, w)) == 0:
            violations.append(Violation((v, w)))
    return ClaimReport("p3a-positive", instances, violations)


def check_path_independence(graph: Orgraph) -> ClaimReport:
    """Ends of a critical two-edge path through a large-outdegree middle
    vertex are independent: critical u->v, v->w with 3*outdegree(v) > n-1
    force u and w independent."""
    reason = _precondition_reason(graph)
    if reason:
        return _skipped("path-independence", reason)
    n = graph.n
    instances = 0
    violations = []
    for u, v, w in _critical_triples(graph):
        if 3 * graph.out_degree(v) <= n - 1:
            continue
        instances += 1
        if not graph.independent(u, w):
            violations.append(Violation((u, v, w)))
    return ClaimReport("path-independence", instances, violations)


def check_k21n_zero(graph: Orgraph) -> ClaimReport:
    """For critical u->v, v->w with u, w independent, no vertex receives an
    edge from both u and w (flag k21_n has density zero)."""
    reason = _precondition_reason(graph)
    if reason:
        return _skipped("k21n-zero", reason)
    instances = 0
    violations = []
    for u, v, w in _critical_triples(graph):
        if not graph.independent(u, w):
            continue
        instances += 1
        common = graph.out_mask(u) & graph.out_mask(w)
        if common:
            violations.append(Violation((u, v, w), (next(_bits(common)),)))
    return ClaimReport("k21n-zero", instances, violations)


def check_oa_p3n_bound(graph: Orgraph) -> ClaimReport:
    """For critical u->v, v->w with u, w independent, in integer form:
    3 * |{x : u->x and v->x}| <= |{x : u->x and x->w}| - 1."""
    reason = _precondition_reason(graph)
    if reason:
        return _skipped("oa-p3n-bound", reason)
    instances = 0
    violations = []
    for u, v, w in _critical_triples(graph):
        if not graph.independent(u, w):
            continue
        instances += 1
        common_out = (graph.out_mask(u) & graph.out_mask(v)).bit_count()
        through = (graph.out_mask(u) & graph.in_mask(w)).bit_count()
        if 3 * common_out > through - 1:
            violations.append(Violation((u, v, w)))
    return ClaimReport("oa-p3n-bound", instances, violations)


def per_vertex_contribution(graph: Orgraph, u: int, v: int, w: int, x: int) -> int:
    """Signed contribution of x to the combined density expression.

    Requires edges u->v and v->w, u and w independent, x outside {u, v, w},
    a triangle-free graph, and that {u, v, w, x} does not induce a
    twisted-circle.  Under those hypotheses the value never exceeds 1.
    """
    if not (graph.has_edge(u, v) and graph.has_edge(v, w)):
        raise PreconditionError("u->v and v->w must be edges")
    if not graph.independent(u, w):
        raise PreconditionError("u and w must be independent")
    if x in (u, v, w):
        raise PreconditionError("x must differ from u, v, w")
    if not graph.is_c3_free():
        raise PreconditionError("graph contains a directed triangle")
    quad = graph.induced_subgraph([u, v, w, x])
    if quad.is_isomorphic_to(TWISTED_CIRCLE.graph):
        raise PreconditionError("{u, v, w, x} induces a twisted-circle")
    e = graph.has_edge
    ind = graph.independent
    total = 0
    total += e(u, x) + e(v, x) + e(w, x)
    total += e(x, u) and e(x, v)
    total += ind(x, u) and e(x, v)
    total -= 2 * (e(u, x) and e(v, x))
    total -= e(v, x) and e(w, x)
    total -= e(x, v) and e(x, w)
    total -= ind(x, v) and e(x, w)
    total += e(u, x) and e(x, w)
    return total


def _density_block(graph: Orgraph, a: int, b: int) -> Fraction:
    """(o_a + i_a + k21_a) at the labeled edge (a, b)."""
    return (
        relative_density(O_A, graph, (a, b))
        + relative_density(I_A, graph, (a, b))
        + relative_density(K21_A, graph, (a, b))
    )


def alpha_sum_lhs(graph: Orgraph, u: int, v: int, w: int) -> Fraction:
    """Left side of the combined inequality at the triple (u, v, w):
    alpha(u) + alpha(v) + alpha(w) + block(u, v) - block(v, w), where
    block = o_a + i_a + k21_a.  Needs u->v and v->w to be edges."""
    if not (graph.has_edge(u, v) and graph.has_edge(v, w)):
        raise PreconditionError("u->v and v->w must be edges")
    return (
        alpha(graph, u)
        + alpha(graph, v)
        + alpha(graph, w)
        + _density_block(graph, u, v)
        - _density_block(graph, v, w)
    )


def check_alpha_sum(graph: Orgraph) -> ClaimReport:
    """Two-layer check of the combined inequality on critical triples.

    Layer one: for critical u->v, v->w with u, w independent, the summed
    per-vertex contributions over x outside {u, v, w} stay at most n-3.
    Layer two: when additionally alpha(u) + alpha(v) + alpha(w) > 1, the
    full left side (alpha terms plus the density blocks) is at most 1.
    """
    reason = _precondition_reason(graph)
    if reason:
        return _skipped("alpha-sum", reason)
    n = graph.n
    instances = 0
    full_instances = 0
    violations = []
    for u, v, w in _critical_triples(graph):
        if not graph.independent(u, w):
            continue
        instances += 1
        total = 0
        worst: tuple[int, ...] | None = None
        for x in range(n):
            if x in (u, v, w):
                continue
            contribution = per_vertex_contribution(graph, u, v, w, x)
            total += contribution
            if contribution > 1:
                worst = (x,)
        if total > n - 3:
            violations.append(Violation((u, v, w), worst))
        alpha_total = alpha(graph, u) + alpha(graph, v) + alpha(graph, w)
        if alpha_total > 1:
            full_instances += 1
            if alpha_sum_lhs(graph, u, v, w) > 1:
                violations.append(Violation((u, v, w)))
    return ClaimReport(
        "alpha-sum",
        instances,
        violations,
        details={"sum_layer_instances": instances, "full_layer_instances": full_instances},
    )


CLAIM_CHECKS = {
    "ohat-zero": check_ohat_zero,
    "p3a-positive": check_p3a_positive,
    "path-independence": check_path_independence,
    "k21n-zero": check_k21n_zero,
    "oa-p3n-bound": check_oa_p3n_bound,
    "alpha-sum": check_alpha_sum,
}


def run_all_claims(graph: Orgraph) -> list[ClaimReport]:
    """All six claim checks, in the catalog order."""
    return [check(graph) for check in CLAIM_CHECKS.values()]


# ---- saturation and the bound itself ----


def is_c4_saturated(graph: Orgraph) -> bool:
    """Every independent pair is a diagonal of a directed four-cycle.

    For each independent (v, w) there must be x with v->x->w and y with
    w->y->v; the four-cycle is then v->x->w->y->v.
    """
    for v in range(graph.n):
        for w in range(v + 1, graph.n):
            if not graph.independent(v, w):
                continue
            if not (graph.out_mask(v) & graph.in_mask(w)):
                return False
            if not (graph.out_mask(w) & graph.in_mask(v)):
                return False
    return True


def check_ch(graph: Orgraph) -> bool:
    """True when some vertex has 3 * outdegree <= n - 1 (exact integers)."""
    return 3 * graph.min_out_degree() <= graph.n - 1


def find_low_outdegree_vertex(graph: Orgraph) -> int:
    """A vertex of minimal outdegree, asserting the (n-1)/3 bound.

    Intended for triangle-free graphs without the forbidden patterns, where
    the bound is guaranteed; raises BoundGuaranteeError when no vertex
    meets it, which signals a precondition breach or an implementation bug
    rather than an interesting discovery.
    """
    if graph.n == 0:
        raise PreconditionError("empty graph")
    best = min(range(graph.n), key=lambda v: (graph.out_degree(v), v))
    if 3 * graph.out_degree(best) > graph.n - 1:
        raise BoundGuaranteeError(
            f"minimal outdegree {graph.out_degree(best)} exceeds ({graph.n} - 1)/3"
        )
    return best
