"""Named small orgraphs and induced / non-induced containment search.

The catalog collects the three- and four-vertex configurations the rest of
the package reasons about, most importantly the three four-vertex patterns
whose exclusion (as induced subgraphs) forces a vertex of outdegree at most
(n-1)/3.  Vertex numbering inside each pattern is part of its definition
and is documented per pattern.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orgraph import Orgraph

__all__ = [
    "Pattern",
    "C3",
    "I3",
    "K12",
    "K21",
    "TRANSITIVE_TRIANGLE",
    "IN_PENDANT",
    "OUT_PENDANT",
    "TWISTED_CIRCLE",
    "CH3_FORBIDDEN",
    "PATTERNS",
    "PATTERNS_BY_NAME",
    "find_induced",
    "contains_induced",
    "contains_subgraph",
    "is_pattern_free",
]


@dataclass(frozen=True)
class Pattern:
    """A named orgraph used as a search target."""

    name: str
    graph: Orgraph

    @property
    def size(self) -> int:
        return self.graph.n


def _pattern(name: str, n: int, edges: list[tuple[int, int]]) -> Pattern:
    return Pattern(name, Orgraph.from_edges(n, edges))


#: Directed triangle 0->1->2->0.
C3 = _pattern("c3", 3, [(0, 1), (1, 2), (2, 0)])

#: Three pairwise independent vertices.
I3 = _pattern("i3", 3, [])

#: Out-star: 0->1, 0->2 with 1, 2 independent.
K12 = _pattern("k12", 3, [(0, 1), (0, 2)])

#: In-star: 0->2, 1->2 with 0, 1 independent.
K21 = _pattern("k21", 3, [(0, 2), (1, 2)])

#: Transitive triangle: source 0, middle 1, target 2.
TRANSITIVE_TRIANGLE = _pattern("trans-triangle", 3, [(0, 1), (0, 2), (1, 2)])

#: Transitive triangle (source 0, middle 1, target 2) plus pendant 3->1.
IN_PENDANT = _pattern("in-pendant", 4, [(0, 1), (0, 2), (1, 2), (3, 1)])

#: Transitive triangle (source 0, middle 1, target 2) plus pendant 1->3.
OUT_PENDANT = _pattern("out-pendant", 4, [(0, 1), (0, 2), (1, 2), (1, 3)])

#: Path 0->1->2->3 closed by the chord 0->3; both diagonals independent.
TWISTED_CIRCLE = _pattern("twisted-circle", 4, [(0, 1), (1, 2), (2, 3), (0, 3)])

#: The induced patterns whose joint absence forces the outdegree bound.
CH3_FORBIDDEN: tuple[Pattern, ...] = (IN_PENDANT, OUT_PENDANT, TWISTED_CIRCLE)

#: Full catalog in declaration order.
PATTERNS: tuple[Pattern, ...] = (
    C3,
    I3,
    K12,
    K21,
    TRANSITIVE_TRIANGLE,
    IN_PENDANT,
    OUT_PENDANT,
    TWISTED_CIRCLE,
)

PATTERNS_BY_NAME: dict[str, Pattern] = {p.name: p for p in PATTERNS}


def _match_order(pattern: Orgraph) -> list[int]:
    """Pattern vertices, most-constrained (highest total degree) first."""
    return sorted(
        range(pattern.n),
        key=lambda p: -(pattern.out_degree(p) + pattern.in_degree(p)),
    )


def _embeddings(graph: Orgraph, pattern: Orgraph, induced: bool):
    """Backtracking search for injective embeddings of ``pattern``.

    In induced mode the relation between every mapped pair must match the
    pattern exactly; in subgraph mode pattern edges must map to edges and
    everything else is unconstrained.  Yields mapping tuples (pattern
    vertex i -> mapping[i]).
    """
    k = pattern.n
    n = graph.n
    if k > n:
        return
    order = _match_order(pattern)
    mapping = [-1] * k
    used = [False] * n

    # cheap per-vertex degree lower bounds hold in both modes
    def degree_ok(p: int, v: int) -> bool:
        return graph.out_degree(v) >= pattern.out_degree(p) and graph.in_degree(
            v
        ) >= pattern.in_degree(p)

    def backtrack(i: int):
        if i == k:
            yield tuple(mapping)
            return
        p = order[i]
        for v in range(n):
            if used[v] or not degree_ok(p, v):
                continue
            ok = True
            for j in range(i):
                q = order[j]
                w = mapping[q]
                forward = pattern.has_edge(p, q)
                backward = pattern.has_edge(q, p)
                if induced:
                    if graph.has_edge(v, w) != forward or graph.has_edge(w, v) != backward:
                        ok = False
                        break
                else:
                    if forward and not graph.has_edge(v, w):
                        ok = False
                        break
                    if backward and not graph.has_edge(w, v):
                        ok = False
                        break
            if ok:
                mapping[p] = v
                used[v] = True
                yield from backtrack(i + 1)
                used[v] = False
                mapping[p] = -1

    yield from backtrack(0)


def find_induced(graph: Orgraph, pattern: Pattern) -> list[tuple[int, ...]]:
    """All induced copies of ``pattern`` in ``graph``.

    Returns one embedding per copy: automorphic re-embeddings onto the same
    vertex set are collapsed to the lexicographically smallest mapping.
    The result is sorted, so it is deterministic.
    """
    by_image: dict[frozenset[int], tuple[int, ...]] = {}
    for mapping in _embeddings(graph, pattern.graph, induced=True):
        image = frozenset(mapping)
        prev = by_image.get(image)
        if prev is None or mapping < prev:
            by_image[image] = mapping
    return sorted(by_image.values())


def contains_induced(graph: Orgraph, pattern: Pattern) -> bool:
    """True when ``graph`` has an induced copy of ``pattern``."""
    return next(_embeddings(graph, pattern.graph, induced=True), None) is not None


def contains_subgraph(graph: Orgraph, pattern: Pattern) -> bool:
    """True when ``graph`` has a (not necessarily induced) copy of ``pattern``."""
    return next(_embeddings(graph, pattern.graph, induced=False), None) is not None


def is_pattern_free(
    graph: Orgraph, patterns: tuple[Pattern, ...] = CH3_FORBIDDEN, induced: bool = True
) -> bool:
    """True when none of ``patterns`` occurs (induced by default)."""
    if induced:
        return not any(contains_induced(graph, p) for p in patterns)
    return not any(contains_subgraph(graph, p) for p in patterns)
