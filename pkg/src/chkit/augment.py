"""Augmentations of the forbidden patterns by forced path witnesses.

In a triangle-free graph where every independent pair is the diagonal of a
directed four-cycle, an induced copy of a forbidden pattern drags extra
vertices with it: every independent pair (v, w) of the pattern with no
two-step path from v to w inside the pattern must pick up an outside
witness x with v->x->w.  Augmenting a pattern adds one fresh witness per
such qualifying pair.  The witnesses of two different pairs may coincide
in the host graph, so the module also classifies every way of identifying
two added vertices: impossible (forces an anti-parallel pair), triangle
-creating, or valid, and checks which valid merges still contain one of
the augmented patterns as a subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orgraph import Orgraph
from .patterns import IN_PENDANT, OUT_PENDANT, TWISTED_CIRCLE, Pattern, contains_subgraph

__all__ = [
    "AddedVertex",
    "AugmentedPattern",
    "qualifying_pairs",
    "augment",
    "not_induced_catalog",
    "AUGMENTED_BY_NAME",
    "MergeClassification",
    "identification_analysis",
]


def qualifying_pairs(pattern: Pattern) -> list[tuple[int, int]]:
    """Ordered independent pairs (v, w) with no x such that v->x->w.

    These are exactly the pairs that demand an outside path witness when
    the pattern sits inside a saturated triangle-free graph.
    """
    graph = pattern.graph
    pairs = []
    for v in range(graph.n):
        for w in range(graph.n):
            if v == w or not graph.independent(v, w):
                continue
            if graph.out_mask(v) & graph.in_mask(w):
                continue
            pairs.append((v, w))
    return pairs


@dataclass(frozen=True)
class AddedVertex:
    """A witness vertex added for one qualifying pair."""

    vertex: int
    pair: tuple[int, int]


@dataclass(frozen=True)
class AugmentedPattern:
    """A base pattern plus one path witness per qualifying pair."""

    name: str
    base: Pattern
    graph: Orgraph
    added: tuple[AddedVertex, ...]

    @property
    def added_indices(self) -> tuple[int, ...]:
        return tuple(a.vertex for a in self.added)


def augment(pattern: Pattern) -> AugmentedPattern:
    """Add one fresh vertex x per qualifying pair (v, w), with v->x->w."""
    pairs = qualifying_pairs(pattern)
    graph = pattern.graph
    added = []
    for v, w in pairs:
        x = graph.n
        graph = graph.add_vertex(out_to=1 << w, in_from=1 << v)
        added.append(AddedVertex(x, (v, w)))
    return AugmentedPattern(f"aug-{pattern.name}", pattern, graph, tuple(added))


def not_induced_catalog() -> tuple[AugmentedPattern, ...]:
    """The augmentations of the three forbidden patterns.

    Any saturated triangle-free host of an induced forbidden pattern must
    contain one of these (or a valid merge of one) as a not-necessarily-
    induced subgraph.
    """
    return tuple(augment(p) for p in (IN_PENDANT, OUT_PENDANT, TWISTED_CIRCLE))


AUGMENTED_BY_NAME: dict[str, AugmentedPattern] = {
    aug.name: aug for aug in not_induced_catalog()
}


@dataclass(frozen=True)
class MergeClassification:
    """Outcome of identifying two added witnesses of an augmented pattern.

    ``outcome`` is one of ``"anti_parallel"`` (the merge would need both
    directions between one vertex pair, impossible in an orgraph),
    ``"creates_c3"`` (the merged graph has a directed triangle), or
    ``"valid"``.  For valid merges ``merged`` holds the merged graph and
    ``contains_augmented`` records whether it still contains some
    augmented pattern as a subgraph.
    """

    first: AddedVertex
    second: AddedVertex
    outcome: str
    merged: Orgraph | None = None
    contains_augmented: bool | None = None


def merge_added(aug: AugmentedPattern, first: AddedVertex, second: AddedVertex) -> Orgraph:
    """Graph with the two added witnesses identified into one vertex.

    The merged vertex keeps the union of both witnesses' edges.  Raises
    ValueError when the union would need an anti-parallel pair (callers
    normally classify that case beforehand).
    """
    v1, w1 = first.pair
    v2, w2 = second.pair
    if v1 == w2 or v2 == w1:
        raise ValueError("identification forces an anti-parallel pair")
    keep = [v for v in range(aug.graph.n) if v != second.vertex]
    position = {v: i for i, v in enumerate(keep)}
    merged_index = position[first.vertex]
    base = aug.graph.induced_subgraph(keep)
    masks = list(base.out_mask(v) for v in range(base.n))
    masks[position[v2]] |= 1 << merged_index
    masks[merged_index] |= 1 << position[w2]
    return Orgraph(base.n, masks)


def identification_analysis(aug: AugmentedPattern) -> list[MergeClassification]:
    """Classify every unordered pair of added witnesses of ``aug``.

    Valid merges additionally report whether the merged graph still
    contains one of the three augmented patterns as a subgraph.
    """
    catalog = not_induced_catalog()
    results = []
    added = aug.added
    for i in range(len(added)):
        for j in range(i + 1, len(added)):
            first, second = added[i], added[j]
            v1, w1 = first.pair
            v2, w2 = second.pair
            if v1 == w2 or v2 == w1:
                results.append(
                    MergeClassification(first, second, "anti_parallel")
                )
                continue
            merged = merge_added(aug, first, second)
            if not merged.is_c3_free():
                results.append(
                    MergeClassification(first, second, "creates_c3", merged)
                )
                continue
            contains = any(
                contains_subgraph(merged, Pattern(c.name, c.graph)) for c in catalog
            )
            results.append(
                MergeClassification(first, second, "valid", merged, contains)
            )
    return results
