from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

import pytest

from chkit import (
    ALPHA,
    FLAGS_BY_NAME,
    I_A,
    K21_A,
    K21_N,
    O_A,
    O_P,
    OHAT_A,
    P3_A,
    P3_N,
    EmptySampleSpaceError,
    Flag,
    LabelEmbeddingError,
    NotC3FreeError,
    Orgraph,
    circulant,
    density,
    generate_flags,
    relative_density,
    restricted_density,
    witnesses,
)
from chkit.flags import TYPE_1, TYPE_A, TYPE_N, check_normalization, flag_isomorphic
from chkit.orgraph import _bits

ONE_FREE_FLAGS = [ALPHA, O_A, I_A, K21_A, P3_A, K21_N, P3_N]


def test_builtin_flag_structures_pinned():
    assert ALPHA.sigma is TYPE_1
    assert ALPHA.graph.edges() == [(0, 1)]
    assert ALPHA.free_vertices == (1,)

    assert O_A.graph.edges() == [(0, 1), (0, 2), (1, 2)]
    assert O_A.theta == (0, 1)
    assert O_A.free_vertices == (2,)

    assert O_P.sigma.k == 3
    assert O_P.graph.edges() == [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert O_P.free_vertices == (3,)

    assert OHAT_A.graph.edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (3, 2)]
    assert OHAT_A.free_vertices == (2, 3)

    assert I_A.graph.edges() == [(0, 1), (2, 0), (2, 1)]
    assert K21_A.graph.edges() == [(0, 1), (2, 1)]
    assert P3_A.graph.edges() == [(0, 1), (1, 2)]
    assert K21_N.graph.edges() == [(0, 2), (1, 2)]
    assert P3_N.graph.edges() == [(0, 2), (2, 1)]

    assert set(FLAGS_BY_NAME) == {
        "alpha",
        "o_a",
        "o_p",
        "ohat_a",
        "i_a",
        "k21_a",
        "p3_a",
        "k21_n",
        "p3_n",
    }


def test_flag_validation_errors():
    host = circulant(1)
    with pytest.raises(LabelEmbeddingError):
        Flag(TYPE_A, host, (0, 0))
    with pytest.raises(LabelEmbeddingError):
        Flag(TYPE_A, host, (1, 0))
    with pytest.raises(LabelEmbeddingError):
        Flag(TYPE_A, host, (0,))
    triangle = Orgraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(NotC3FreeError):
        Flag(TYPE_A, triangle, (0, 1))


def test_density_identity_and_empty_space():
    assert density(ALPHA, ALPHA) == 1
    small = Flag(TYPE_A, TYPE_A.graph, (0, 1))
    with pytest.raises(EmptySampleSpaceError):
        density(O_A, small)


def test_pinned_density_examples():
    c1, c2 = circulant(1), circulant(2)
    assert relative_density(O_A, c1, (0, 1)) == 0
    assert relative_density(P3_A, c1, (0, 1)) == Fraction(1, 2)
    assert relative_density(O_A, c2, (0, 1)) == Fraction(1, 5)


def _naive_relative_density(flag: Flag, host: Orgraph, labels: tuple[int, ...]):
    k = flag.sigma.k
    ell = flag.size
    free_host = [v for v in range(host.n) if v not in labels]
    free_flag = flag.free_vertices
    hits = 0
    for extra in itertools.combinations(free_host, ell - k):
        found = False
        for image in itertools.permutations(extra):
            mapping = dict(zip(free_flag, image))
            mapping.update(zip(flag.theta, labels))
            if all(
                host.has_edge(mapping[a], mapping[b]) == flag.graph.has_edge(a, b)
                for a in mapping
                for b in mapping
                if a != b
            ):
                found = True
                break
        if found:
            hits += 1
    return Fraction(hits, comb(host.n - k, ell - k))


def _typed_label_tuples(host: Orgraph, sigma) -> list[tuple[int, ...]]:
    out = []
    for labels in itertools.permutations(range(host.n), sigma.k):
        if all(
            host.has_edge(labels[i], labels[j]) == sigma.graph.has_edge(i, j)
            for i in range(sigma.k)
            for j in range(sigma.k)
            if i != j
        ):
            out.append(labels)
    return out


def test_relative_density_matches_naive_oracle(flag_hosts):
    flags = ONE_FREE_FLAGS + [OHAT_A]
    for host in flag_hosts[::7]:
        for flag in flags:
            for labels in _typed_label_tuples(host, flag.sigma)[:4]:
                if host.n < flag.size:
                    continue
                assert relative_density(flag, host, labels) == _naive_relative_density(
                    flag, host, labels
                )


def test_alpha_equals_normalized_outdegree(flag_hosts):
    for host in flag_hosts[::5]:
        if host.n < 2:
            continue
        for v in range(host.n):
            expected = Fraction(host.out_degree(v), host.n - 1)
            assert relative_density(ALPHA, host, (v,)) == expected


def test_outdegree_decomposition_along_edges(flag_hosts):
    # along any edge v->w: alpha(w) = (n-2)/(n-1) * (O_A + P3_A)(v, w)
    for host in flag_hosts[::5]:
        n = host.n
        if n < 3:
            continue
        for v, w in host.edges():
            alpha_w = relative_density(ALPHA, host, (w,))
            o_a = relative_density(O_A, host, (v, w))
            p3_a = relative_density(P3_A, host, (v, w))
            assert alpha_w == Fraction(n - 2, n - 1) * (o_a + p3_a)


def _independent_path_triples(host: Orgraph):
    for u in range(host.n):
        for v in _bits(host.out_mask(u)):
            for w in _bits(host.out_mask(v)):
                if host.independent(u, w):
                    yield u, v, w


def test_five_lift_identities(flag_hosts):
    for host in flag_hosts[::9]:
        n = host.n
        if n < 4:
            continue
        for u, v, w in _independent_path_triples(host):
            scale1 = Fraction(n - 3, n - 1)
            alpha_u = relative_density(ALPHA, host, (u,))
            alpha_v = relative_density(ALPHA, host, (v,))
            alpha_w = relative_density(ALPHA, host, (w,))
            assert alpha_u == scale1 * restricted_density(
                ALPHA, host, (u,), {v, w}
            ) + Fraction(1, n - 1)
            assert alpha_v == scale1 * restricted_density(
                ALPHA, host, (v,), {u, w}
            ) + Fraction(1, n - 1)
            assert alpha_w == scale1 * restricted_density(ALPHA, host, (w,), {u, v})

            scale2 = Fraction(n - 3, n - 2)
            assert relative_density(P3_N, host, (u, w)) == scale2 * restricted_density(
                P3_N, host, (u, w), {v}
            ) + Fraction(1, n - 2)

            for flag in (O_A, I_A, K21_A):
                for labels, gone in (((u, v), w), ((v, w), u)):
                    assert relative_density(
                        flag, host, labels
                    ) == scale2 * restricted_density(flag, host, labels, {gone})


def test_restricted_density_examples():
    c2 = circulant(2)
    assert restricted_density(O_A, c2, (0, 1), set()) == relative_density(
        O_A, c2, (0, 1)
    )
    assert restricted_density(O_A, c2, (0, 1), {2}) == 0
    with pytest.raises(LabelEmbeddingError):
        restricted_density(O_A, c2, (0, 1), {0})
    with pytest.raises(EmptySampleSpaceError):
        restricted_density(O_A, c2, (0, 1), {2, 3, 4, 5, 6})


def test_restricted_density_needs_one_free_vertex():
    c2 = circulant(2)
    with pytest.raises(Exception):
        restricted_density(OHAT_A, c2, (0, 1), set())


def test_normalization_partitions_sample_space():
    c2 = circulant(2)
    assert check_normalization(c2, TYPE_A, (0, 1), 3)
    assert check_normalization(c2, TYPE_1, (0,), 2)
    assert check_normalization(c2, TYPE_N, (0, 3), 3)
    c1 = circulant(1)
    assert check_normalization(c1, TYPE_A, (0, 1), 3)


def test_generate_flags_counts_match_brute_force():
    # extend the type by one free vertex in all 3^k ways and dedup by
    # brute-force label-pinned isomorphism
    for sigma, expected_from in ((TYPE_1, 1), (TYPE_A, 2), (TYPE_N, 2)):
        size = sigma.k + 1
        flags = generate_flags(sigma, size)
        classes: list[Flag] = []
        for trits in itertools.product((0, 1, 2), repeat=sigma.k):
            out_to = 0
            in_from = 0
            for i, t in enumerate(trits):
                if t == 1:
                    in_from |= 1 << i
                elif t == 2:
                    out_to |= 1 << i
            candidate = sigma.graph.add_vertex(out_to=out_to, in_from=in_from)
            if not candidate.is_c3_free():
                continue
            flag = Flag(sigma, candidate, tuple(range(sigma.k)))
            if not any(flag_isomorphic(flag, seen) for seen in classes):
                classes.append(flag)
        assert len(flags) == len(classes)
        assert sigma.k == expected_from


def test_generate_flags_type_a_size_3():
    flags = generate_flags(TYPE_A, 3)
    assert len(flags) == 8
    names_present = sum(
        1
        for builtin in (O_A, I_A, K21_A, P3_A)
        if any(flag_isomorphic(f, builtin) for f in flags)
    )
    assert names_present == 4


def test_witnesses_alignment():
    c2 = circulant(2)
    assert witnesses(O_A, c2, (0, 1)) == [(2,)]
    assert witnesses(P3_A, circulant(1), (0, 1)) == [(2,)]
    host = OHAT_A.graph
    assert witnesses(OHAT_A, host, (0, 1)) == [(2, 3)]
