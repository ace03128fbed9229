"""Exact flag densities on oriented graphs.

A *type* is a small orgraph whose vertices act as labels; a *flag* is an
orgraph together with an induced embedding of a type (the labeled part).
The density of a flag F (k labels, ell vertices) in a larger flag with the
same type counts the ell-subsets through the labeled vertices that induce a
copy of F, normalized by C(n-k, ell-k).  All densities are exact
:class:`fractions.Fraction` values; nothing in this module touches floats.

Besides plain densities the module provides the "restricted" variant used
by the verifier, where a set of extra vertices is removed from the sample
space of the single free vertex, and generation of all flags of a type up
to flag isomorphism (for normalization checks).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .orgraph import Orgraph

__all__ = [
    "FlagError",
    "TypeMismatchError",
    "EmptySampleSpaceError",
    "LabelEmbeddingError",
    "NotC3FreeError",
    "TypeSpec",
    "Flag",
    "TYPE_0",
    "TYPE_1",
    "TYPE_A",
    "TYPE_N",
    "TYPE_P",
    "ALPHA",
    "O_A",
    "O_P",
    "OHAT_A",
    "I_A",
    "K21_A",
    "P3_A",
    "K21_N",
    "P3_N",
    "FLAGS_BY_NAME",
    "flag_isomorphic",
    "density",
    "relative_density",
    "restricted_density",
    "witnesses",
    "generate_flags",
    "check_normalization",
]


class FlagError(ValueError):
    """Malformed flag data or an invalid density computation."""


class TypeMismatchError(FlagError):
    """Two flags that were expected to share a type do not."""


class EmptySampleSpaceError(FlagError):
    """A density was requested over zero admissible vertex choices."""


class LabelEmbeddingError(FlagError):
    """Label vertices do not induce the required type exactly."""


class NotC3FreeError(FlagError):
    """The host graph contains a directed triangle."""


@dataclass(frozen=True)
class TypeSpec:
    """A type: an orgraph on k labeled vertices (k may be 0)."""

    graph: Orgraph

    def __post_init__(self):
        if not self.graph.is_c3_free():
            raise NotC3FreeError("a type must be triangle-free")

    @property
    def k(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class Flag:
    """An orgraph with an induced embedding ``theta`` of its type.

    ``theta[i]`` is the graph vertex carrying label i.  The embedding must
    be injective and induced: labels must relate in the graph exactly as
    they do in the type.  Vertices outside ``theta`` are the free vertices.
    """

    sigma: TypeSpec
    graph: Orgraph
    theta: tuple[int, ...]

    def __post_init__(self):
        k = self.sigma.k
        if len(self.theta) != k:
            raise LabelEmbeddingError(f"expected {k} labels, got {len(self.theta)}")
        if len(set(self.theta)) != k:
            raise LabelEmbeddingError("label embedding must be injective")
        for v in self.theta:
            if not 0 <= v < self.graph.n:
                raise LabelEmbeddingError(f"label vertex {v} outside the graph")
        for i in range(k):
            for j in range(k):
                if i != j and self.sigma.graph.has_edge(i, j) != self.graph.has_edge(
                    self.theta[i], self.theta[j]
                ):
                    raise LabelEmbeddingError(
                        "labels do not induce the type: "
                        f"pair ({self.theta[i]}, {self.theta[j]}) disagrees"
                    )
        if not self.graph.is_c3_free():
            raise NotC3FreeError("flag graphs must be triangle-free")

    @property
    def size(self) -> int:
        return self.graph.n

    @property
    def free_vertices(self) -> tuple[int, ...]:
        labeled = set(self.theta)
        return tuple(v for v in range(self.graph.n) if v not in labeled)

    def restrict(self, vertices: Iterable[int]) -> "Flag":
        """Induced subflag on ``vertices`` (which must contain all labels)."""
        subset = sorted(set(vertices))
        missing = set(self.theta) - set(subset)
        if missing:
            raise LabelEmbeddingError(f"restriction drops labels {sorted(missing)}")
        position = {v: i for i, v in enumerate(subset)}
        return Flag(
            self.sigma,
            self.graph.induced_subgraph(subset),
            tuple(position[v] for v in self.theta),
        )


def flag_isomorphic(first: Flag, second: Flag) -> bool:
    """Label-preserving isomorphism of two flags of the same type."""
    if first.sigma != second.sigma:
        raise TypeMismatchError("flags have different types")
    if first.size != second.size:
        return False
    free1 = first.free_vertices
    free2 = second.free_vertices
    g1, g2 = first.graph, second.graph
    base = dict(zip(first.theta, second.theta))
    for image in itertools.permutations(free2):
        mapping = dict(base)
        mapping.update(zip(free1, image))
        ok = True
        for a in mapping:
            for b in mapping:
                if a != b and g1.has_edge(a, b) != g2.has_edge(mapping[a], mapping[b]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


# ---- built-in types ----

TYPE_0 = TypeSpec(Orgraph(0, []))
TYPE_1 = TypeSpec(Orgraph.from_edges(1, []))
#: One directed edge 0->1.
TYPE_A = TypeSpec(Orgraph.from_edges(2, [(0, 1)]))
#: Two independent vertices.
TYPE_N = TypeSpec(Orgraph.from_edges(2, []))
#: Directed path 0->1->2 with 0, 2 independent.
TYPE_P = TypeSpec(Orgraph.from_edges(3, [(0, 1), (1, 2)]))


def _flag(sigma: TypeSpec, n: int, edges: list[tuple[int, int]]) -> Flag:
    return Flag(sigma, Orgraph.from_edges(n, edges), tuple(range(sigma.k)))


#: Single out-edge from the label; its density at v is outdegree(v)/(n-1).
ALPHA = _flag(TYPE_1, 2, [(0, 1)])
#: Free vertex receiving an edge from both ends of the labeled edge.
O_A = _flag(TYPE_A, 3, [(0, 1), (0, 2), (1, 2)])
#: Free vertex receiving an edge from all three labels of the path type.
O_P = _flag(TYPE_P, 4, [(0, 1), (1, 2), (0, 3), (1, 3), (2, 3)])
#: O_P with the path's last label freed: free y continues the labeled edge
#: (1->y, 0 and y independent) and free x receives edges from 0, 1 and y.
OHAT_A = _flag(TYPE_A, 4, [(0, 1), (1, 3), (0, 2), (1, 2), (3, 2)])
#: Free vertex sending an edge to both ends of the labeled edge.
I_A = _flag(TYPE_A, 3, [(0, 1), (2, 0), (2, 1)])
#: Free vertex sending an edge to the head only (independent of the tail).
K21_A = _flag(TYPE_A, 3, [(0, 1), (2, 1)])
#: Free vertex extending the labeled edge to a path (independent of the tail).
P3_A = _flag(TYPE_A, 3, [(0, 1), (1, 2)])
#: Free vertex receiving an edge from both (independent) labels.
K21_N = _flag(TYPE_N, 3, [(0, 2), (1, 2)])
#: Free vertex on a path from label 0 to label 1.
P3_N = _flag(TYPE_N, 3, [(0, 2), (2, 1)])

FLAGS_BY_NAME: dict[str, Flag] = {
    "alpha": ALPHA,
    "o_a": O_A,
    "o_p": O_P,
    "ohat_a": OHAT_A,
    "i_a": I_A,
    "k21_a": K21_A,
    "p3_a": P3_A,
    "k21_n": K21_N,
    "p3_n": P3_N,
}


# ---- densities ----


def density(flag: Flag, host: Flag) -> Fraction:
    """Density of ``flag`` inside the larger flag ``host`` (same type).

    Counts the size-ell vertex subsets of the host that contain all labels
    and induce a flag isomorphic to ``flag``, divided by C(n-k, ell-k).
    """
    if flag.sigma != host.sigma:
        raise TypeMismatchError("flag and host must share a type")
    k = flag.sigma.k
    ell = flag.size
    n = host.size
    if n < ell:
        raise EmptySampleSpaceError(
            f"host has {n} vertices but the flag needs {ell}"
        )
    labeled = set(host.theta)
    free = [v for v in range(n) if v not in labeled]
    count = 0
    for extra in itertools.combinations(free, ell - k):
        sub = host.restrict(host.theta + extra)
        if flag_isomorphic(sub, flag):
            count += 1
    return Fraction(count, comb(n - k, ell - k))


def _check_labels(flag: Flag, graph: Orgraph, labels: Sequence[int]) -> None:
    if not graph.is_c3_free():
        raise NotC3FreeError("host graph contains a directed triangle")
    k = flag.sigma.k
    if len(labels) != k:
        raise LabelEmbeddingError(f"expected {k} labels, got {len(labels)}")


def relative_density(flag: Flag, graph: Orgraph, labels: Sequence[int]) -> Fraction:
    """Density of ``flag`` in ``graph`` with the labels placed at ``labels``.

    The label vertices must induce the flag's type exactly (otherwise
    LabelEmbeddingError); the graph must be triangle-free.
    """
    _check_labels(flag, graph, labels)
    host = Flag(flag.sigma, graph, tuple(labels))
    return density(flag, host)


def _free_profile(flag: Flag) -> list[tuple[bool, bool]]:
    """Relations (label->free, free->label) of a single-free-vertex flag."""
    (x,) = flag.free_vertices
    return [
        (flag.graph.has_edge(flag.theta[i], x), flag.graph.has_edge(x, flag.theta[i]))
        for i in range(flag.sigma.k)
    ]


def restricted_density(
    flag: Flag, graph: Orgraph, labels: Sequence[int], excluded: Iterable[int]
) -> Fraction:
    """Density of a one-free-vertex flag with some vertices removed.

    The free vertex ranges over V minus the labels minus ``excluded``; the
    denominator shrinks accordingly.  An empty sample space is an error, not
    a zero.
    """
    _check_labels(flag, graph, labels)
    if len(flag.free_vertices) != 1:
        raise FlagError("restricted density needs exactly one free vertex")
    exclusion = set(excluded)
    overlap = exclusion & set(labels)
    if overlap:
        raise LabelEmbeddingError(f"excluded vertices {sorted(overlap)} carry labels")
    Flag(flag.sigma, graph, tuple(labels))  # validates the label embedding
    denominator = graph.n - len(labels) - len(exclusion)
    if denominator <= 0:
        raise EmptySampleSpaceError("no admissible free vertices remain")
    profile = _free_profile(flag)
    count = 0
    for x in range(graph.n):
        if x in exclusion or x in labels:
            continue
        if all(
            graph.has_edge(labels[i], x) == fwd and graph.has_edge(x, labels[i]) == bwd
            for i, (fwd, bwd) in enumerate(profile)
        ):
            count += 1
    return Fraction(count, denominator)


def witnesses(
    flag: Flag, graph: Orgraph, labels: Sequence[int]
) -> list[tuple[int, ...]]:
    """Free-vertex assignments realizing ``flag`` at ``labels``.

    One tuple per realizing vertex subset, aligned with the flag's free
    vertices in increasing order.  Useful for reporting violations.
    """
    _check_labels(flag, graph, labels)
    host = Flag(flag.sigma, graph, tuple(labels))
    free_host = [v for v in range(graph.n) if v not in set(labels)]
    hits: list[tuple[int, ...]] = []
    free_flag = flag.free_vertices
    for extra in itertools.combinations(free_host, flag.size - flag.sigma.k):
        sub = host.restrict(host.theta + extra)
        if not flag_isomorphic(sub, flag):
            continue
        # recover one concrete assignment flag-free-vertex -> graph vertex
        for image in itertools.permutations(extra):
            mapping = dict(zip(flag.theta, labels))
            mapping.update(zip(free_flag, image))
            if all(
                flag.graph.has_edge(a, b) == graph.has_edge(mapping[a], mapping[b])
                for a in mapping
                for b in mapping
                if a != b
            ):
                hits.append(tuple(mapping[f] for f in free_flag))
                break
    return hits


# ---- flag generation and normalization ----


def _flag_canonical_key(flag: Flag) -> tuple:
    """Minimal encoding over free-vertex orderings, labels pinned first."""
    k = flag.sigma.k
    n = flag.size
    free = flag.free_vertices
    best: tuple[int, ...] | None = None
    for image in itertools.permutations(free):
        perm = [0] * n
        for i, v in enumerate(flag.theta):
            perm[v] = i
        for i, v in enumerate(image):
            perm[v] = k + i
        rows = [0] * n
        for v in range(n):
            mask = 0
            for w in range(n):
                if flag.graph.has_edge(v, w):
                    mask |= 1 << perm[w]
            rows[perm[v]] = mask
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return (n, best)


def generate_flags(sigma: TypeSpec, size: int) -> list[Flag]:
    """All triangle-free flags of ``sigma`` on ``size`` vertices, up to
    flag isomorphism, in a deterministic order."""
    if size < sigma.k:
        raise FlagError(f"flag size {size} below type size {sigma.k}")
    current: dict[tuple, Flag] = {}
    seed = Flag(sigma, sigma.graph, tuple(range(sigma.k)))
    current[_flag_canonical_key(seed)] = seed
    for _ in range(size - sigma.k):
        nxt: dict[tuple, Flag] = {}
        for flag_ in current.values():
            m = flag_.size
            # relation of the new vertex to each existing one: 0 none,
            # 1 old->new, 2 new->old
            for trits in itertools.product((0, 1, 2), repeat=m):
                out_to = 0
                in_from = 0
                for v, t in enumerate(trits):
                    if t == 1:
                        in_from |= 1 << v
                    elif t == 2:
                        out_to |= 1 << v
                candidate = flag_.graph.add_vertex(out_to=out_to, in_from=in_from)
                if not candidate.is_c3_free():
                    continue
                extended = Flag(sigma, candidate, flag_.theta)
                key = _flag_canonical_key(extended)
                if key not in nxt:
                    nxt[key] = extended
        current = nxt
    return [current[key] for key in sorted(current)]


def check_normalization(
    graph: Orgraph, sigma: TypeSpec, labels: Sequence[int], size: int
) -> bool:
    """True when the relative densities of all flags of ``sigma`` on
    ``size`` vertices sum to exactly 1 at the given label placement."""
    total = sum(
        relative_density(f, graph, labels) for f in generate_flags(sigma, size)
    )
    return total == 1
