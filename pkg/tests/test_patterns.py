from __future__ import annotations

import itertools

import pytest

from chkit import (
    C3,
    CH3_FORBIDDEN,
    I3,
    IN_PENDANT,
    K12,
    K21,
    OUT_PENDANT,
    PATTERNS,
    PATTERNS_BY_NAME,
    TRANSITIVE_TRIANGLE,
    TWISTED_CIRCLE,
    Orgraph,
    Pattern,
    circulant,
    contains_induced,
    contains_subgraph,
    find_induced,
    is_pattern_free,
)


def test_catalog_structures_pinned():
    assert C3.graph.edges() == [(0, 1), (1, 2), (2, 0)]
    assert I3.graph.edges() == []
    assert K12.graph.edges() == [(0, 1), (0, 2)]
    assert K21.graph.edges() == [(0, 2), (1, 2)]
    assert TRANSITIVE_TRIANGLE.graph.edges() == [(0, 1), (0, 2), (1, 2)]
    assert IN_PENDANT.graph.edges() == [(0, 1), (0, 2), (1, 2), (3, 1)]
    assert OUT_PENDANT.graph.edges() == [(0, 1), (0, 2), (1, 2), (1, 3)]
    assert TWISTED_CIRCLE.graph.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert CH3_FORBIDDEN == (IN_PENDANT, OUT_PENDANT, TWISTED_CIRCLE)
    assert [p.name for p in PATTERNS] == [
        "c3",
        "i3",
        "k12",
        "k21",
        "trans-triangle",
        "in-pendant",
        "out-pendant",
        "twisted-circle",
    ]
    assert all(PATTERNS_BY_NAME[p.name] is p for p in PATTERNS)
    assert all(p.graph.is_c3_free() for p in PATTERNS if p.name != "c3")


def test_sizes():
    assert [p.size for p in PATTERNS] == [3, 3, 3, 3, 3, 4, 4, 4]


def _naive_contains(host: Orgraph, pattern: Pattern, induced: bool) -> bool:
    pg = pattern.graph
    for sub in itertools.combinations(range(host.n), pattern.size):
        for image in itertools.permutations(sub):
            ok = True
            for a in range(pattern.size):
                for b in range(pattern.size):
                    if a == b:
                        continue
                    present = host.has_edge(image[a], image[b])
                    wanted = pg.has_edge(a, b)
                    if induced:
                        if present != wanted:
                            ok = False
                            break
                    elif wanted and not present:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False


def test_containment_matches_naive_oracle(c3_free_levels):
    hosts = [g for n in (3, 4, 5) for g in c3_free_levels[n]]
    for host in hosts:
        for pattern in PATTERNS:
            assert contains_induced(host, pattern) == _naive_contains(
                host, pattern, induced=True
            )
            assert contains_subgraph(host, pattern) == _naive_contains(
                host, pattern, induced=False
            )


def test_induced_vs_subgraph_distinction():
    tt = TRANSITIVE_TRIANGLE.graph
    assert contains_subgraph(tt, K12)
    assert not contains_induced(tt, K12)
    assert contains_subgraph(tt, K21)
    assert not contains_induced(tt, K21)


def test_find_induced_images_and_order():
    host = circulant(2)
    hits = find_induced(host, TRANSITIVE_TRIANGLE)
    assert hits
    assert hits == sorted(hits)
    images = {frozenset(hit) for hit in hits}
    assert len(images) == len(hits)
    for hit in hits:
        sub = host.induced_subgraph(hit)
        assert sub.is_isomorphic_to(TRANSITIVE_TRIANGLE.graph)
    assert frozenset((0, 1, 2)) in images


def test_find_induced_maps_are_lex_smallest():
    host = Orgraph.from_edges(3, [])
    hits = find_induced(host, I3)
    assert hits == [(0, 1, 2)]


def test_circulants_avoid_forbidden_patterns():
    for h in (1, 2, 3):
        g = circulant(h)
        assert is_pattern_free(g)
        assert not contains_induced(g, K12)
        assert not contains_induced(g, K21)


def test_pattern_free_respects_argument():
    host = Orgraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (3, 1)])
    assert contains_induced(host, IN_PENDANT)
    assert not is_pattern_free(host)
    assert is_pattern_free(host, patterns=(TWISTED_CIRCLE,))


def test_c3_detection_via_pattern():
    triangle = Orgraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert contains_induced(triangle, C3)
    assert not contains_induced(circulant(2), C3)


def test_twisted_circle_is_c4_with_one_flip():
    c4 = Orgraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert not contains_induced(c4, TWISTED_CIRCLE)
    assert TWISTED_CIRCLE.graph.girth() is None
