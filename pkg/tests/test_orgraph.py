from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from chkit import (
    AntiParallelError,
    DuplicateEdgeError,
    GraphTextError,
    LoopError,
    Orgraph,
    VertexRangeError,
)

C4_EDGES = [(0, 1), (1, 2), (2, 3), (3, 0)]


@st.composite
def orgraphs(draw, min_n: int = 1, max_n: int = 6):
    n = draw(st.integers(min_n, max_n))
    out = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            t = draw(st.sampled_from((0, 1, 2)))
            if t == 1:
                out[u] |= 1 << v
            elif t == 2:
                out[v] |= 1 << u
    return Orgraph(n, out)


def test_from_edges_builds_expected_masks():
    g = Orgraph.from_edges(4, C4_EDGES)
    assert g.n == 4
    assert g.edge_count == 4
    assert g.edges() == sorted(C4_EDGES)
    assert g.out_neighbors(0) == (1,)
    assert g.in_neighbors(0) == (3,)
    assert g.out_degree(0) == 1
    assert g.in_degree(0) == 1
    assert g.min_out_degree() == 1


def test_construction_rejects_loops():
    with pytest.raises(LoopError):
        Orgraph(2, [0b01, 0])
    with pytest.raises(LoopError):
        Orgraph.from_edges(2, [(1, 1)])


def test_construction_rejects_anti_parallel_pairs():
    with pytest.raises(AntiParallelError):
        Orgraph.from_edges(2, [(0, 1), (1, 0)])


def test_from_edges_rejects_duplicates_and_bad_vertices():
    with pytest.raises(DuplicateEdgeError):
        Orgraph.from_edges(3, [(0, 1), (0, 1)])
    with pytest.raises(VertexRangeError):
        Orgraph.from_edges(3, [(0, 3)])
    with pytest.raises(VertexRangeError):
        Orgraph.from_edges(3, [(-1, 0)])


def test_masks_out_of_range_rejected():
    with pytest.raises(VertexRangeError):
        Orgraph(2, [0b100, 0])


def test_independence():
    g = Orgraph.from_edges(3, [(0, 1)])
    assert not g.independent(0, 1)
    assert not g.independent(1, 0)
    assert g.independent(0, 2)
    assert not g.independent(2, 2)


def test_has_edge_direction():
    g = Orgraph.from_edges(2, [(0, 1)])
    assert g.has_edge(0, 1)
    assert not g.has_edge(1, 0)


def test_c3_detection():
    triangle = Orgraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    transitive = Orgraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert not triangle.is_c3_free()
    assert transitive.is_c3_free()
    assert Orgraph.from_edges(4, C4_EDGES).is_c3_free()


def test_girth_values():
    assert Orgraph.from_edges(3, [(0, 1), (1, 2), (2, 0)]).girth() == 3
    assert Orgraph.from_edges(4, C4_EDGES).girth() == 4
    assert Orgraph.from_edges(3, [(0, 1), (0, 2), (1, 2)]).girth() is None
    assert Orgraph(1, [0]).girth() is None


def _girth_by_walk_counting(g: Orgraph) -> int | None:
    # trace of the k-th adjacency power is positive iff a closed walk of
    # length k exists; the shortest closed walk is a directed cycle
    n = g.n
    a = [[1 if g.has_edge(u, v) else 0 for v in range(n)] for u in range(n)]
    power = [row[:] for row in a]
    for k in range(1, n + 1):
        if k > 1:
            power = [
                [sum(power[u][m] * a[m][v] for m in range(n)) for v in range(n)]
                for u in range(n)
            ]
        if any(power[v][v] for v in range(n)):
            return k
    return None


@given(orgraphs())
def test_girth_matches_walk_counting_oracle(g):
    assert g.girth() == _girth_by_walk_counting(g)


def test_induced_subgraph_keeps_relations():
    g = Orgraph.from_edges(5, [(0, 2), (2, 4), (4, 0), (1, 2), (3, 4)])
    sub = g.induced_subgraph([0, 2, 4])
    assert sub.n == 3
    assert sub.edges() == [(0, 1), (1, 2), (2, 0)]


def test_induced_subgraph_collapses_duplicates():
    g = Orgraph.from_edges(3, [(0, 1)])
    assert g.induced_subgraph([0, 0]) == g.induced_subgraph([0])
    with pytest.raises(VertexRangeError):
        g.induced_subgraph([0, 5])


def test_relabel_roundtrip():
    g = Orgraph.from_edges(4, C4_EDGES)
    perm = [2, 0, 3, 1]
    inverse = [perm.index(i) for i in range(4)]
    assert g.relabel(perm).relabel(inverse) == g


def test_add_vertex():
    g = Orgraph.from_edges(2, [(0, 1)])
    bigger = g.add_vertex(out_to=0b01, in_from=0b10)
    assert bigger.n == 3
    assert bigger.edges() == [(0, 1), (1, 2), (2, 0)]
    with pytest.raises(AntiParallelError):
        g.add_vertex(out_to=0b01, in_from=0b01)


@given(st.data())
def test_canonical_key_is_isomorphism_invariant(data):
    g = data.draw(orgraphs())
    perm = list(data.draw(st.permutations(range(g.n))))
    assert g.relabel(perm).canonical_key() == g.canonical_key()


@given(orgraphs())
def test_canonical_form_is_isomorphic_and_stable(g):
    canon = g.canonical_form()
    assert canon.is_isomorphic_to(g)
    assert canon.canonical_key() == g.canonical_key()
    assert canon.canonical_form() == canon


@given(st.data())
def test_isomorphism_agrees_with_canonical_keys(data):
    a = data.draw(orgraphs(max_n=5))
    b = data.draw(orgraphs(min_n=a.n, max_n=a.n))
    assert a.is_isomorphic_to(b) == (a.canonical_key() == b.canonical_key())


def test_isomorphism_negative_same_degree_sequence():
    cycle = Orgraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    two_triangles = Orgraph.from_edges(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    )
    assert not cycle.is_isomorphic_to(two_triangles)


def test_text_roundtrip_exact():
    g = Orgraph.from_edges(4, C4_EDGES)
    text = g.to_text()
    assert text == "orgraph 4\n0 1\n1 2\n2 3\n3 0\n"
    assert Orgraph.from_text(text) == g


def test_from_text_ignores_comments_and_blanks():
    text = "# a remark\n\norgraph 3\n# another\n0 1\n\n1 2\n"
    assert Orgraph.from_text(text) == Orgraph.from_edges(3, [(0, 1), (1, 2)])


@given(orgraphs())
def test_text_roundtrip_property(g):
    assert Orgraph.from_text(g.to_text()) == g


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "header"),
        ("orgraph\n", "header"),
        ("orgraph x\n", "vertex count"),
        ("orgraph 2\n0\n", "line 2"),
        ("orgraph 2\n0 two\n", "line 2"),
    ],
)
def test_from_text_syntax_diagnostics(text, fragment):
    with pytest.raises(GraphTextError) as err:
        Orgraph.from_text(text)
    assert fragment in str(err.value)


@pytest.mark.parametrize(
    "text, error",
    [
        ("orgraph 2\n0 2\n", VertexRangeError),
        ("orgraph 2\n0 0\n", LoopError),
        ("orgraph 2\n0 1\n0 1\n", DuplicateEdgeError),
        ("orgraph 2\n0 1\n1 0\n", AntiParallelError),
    ],
)
def test_from_text_semantic_diagnostics(text, error):
    with pytest.raises(error):
        Orgraph.from_text(text)


def test_equality_and_hash():
    a = Orgraph.from_edges(3, [(0, 1), (1, 2)])
    b = Orgraph.from_edges(3, [(1, 2), (0, 1)])
    c = Orgraph.from_edges(3, [(0, 1)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != c
    assert len({a, b, c}) == 2


def test_graphs_on_three_vertices_class_count():
    # 7 isomorphism classes, 6 of them triangle-free
    reps = {}
    for trits in itertools.product((0, 1, 2), repeat=3):
        out = [0] * 3
        for (u, v), t in zip([(0, 1), (0, 2), (1, 2)], trits):
            if t == 1:
                out[u] |= 1 << v
            elif t == 2:
                out[v] |= 1 << u
        g = Orgraph(3, out)
        reps[g.canonical_key()] = g
    assert len(reps) == 7
    assert sum(1 for g in reps.values() if g.is_c3_free()) == 6
