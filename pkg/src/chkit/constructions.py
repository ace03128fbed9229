"""Extremal constructions: circulants, lexicographic products, leaf trees.

Every construction here is triangle-free, avoids the three forbidden
four-vertex patterns, and meets the outdegree bound (n-1)/3 with equality
wherever that is arithmetically possible.  The tree construction assigns
exact rational weights to leaves; its defining property is that the
weighted out-measure of every vertex equals (1 - weight(v)) / 3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .orgraph import Orgraph

__all__ = [
    "circulant",
    "lex_product",
    "TreeSpec",
    "TreeSpecError",
    "WeightedOrgraph",
    "from_tree_spec",
    "weighted_out_measure",
    "is_uniform",
    "is_biregular",
]


def circulant(h: int) -> Orgraph:
    """Circulant orgraph on n = 3h+1 vertices: i -> j iff (j-i) mod n in 1..h."""
    if h < 1:
        raise ValueError(f"circulant parameter must be >= 1, got {h}")
    n = 3 * h + 1
    masks = []
    for i in range(n):
        mask = 0
        for d in range(1, h + 1):
            mask |= 1 << ((i + d) % n)
        masks.append(mask)
    return Orgraph(n, masks)


def lex_product(outer: Orgraph, inner: Orgraph) -> Orgraph:
    """Lexicographic product: copies of ``inner`` substituted into ``outer``.

    Vertex (a, b) becomes index a * inner.n + b.  (a1, b1) -> (a2, b2) is an
    edge iff a1 -> a2 in the outer graph, or a1 == a2 and b1 -> b2 in the
    inner graph.
    """
    n1, n2 = outer.n, inner.n
    masks = []
    inner_rows = [inner.out_mask(b) for b in range(n2)]
    full_inner = (1 << n2) - 1
    for a in range(n1):
        block_targets = 0
        for a2 in range(n1):
            if outer.has_edge(a, a2):
                block_targets |= full_inner << (a2 * n2)
        for b in range(n2):
            masks.append(block_targets | (inner_rows[b] << (a * n2)))
    return Orgraph(n1 * n2, masks)


class TreeSpecError(ValueError):
    """Structurally invalid tree specification."""


@dataclass(frozen=True)
class TreeSpec:
    """Recursive description of a leaf-weighted construction.

    A node is either a leaf (``h is None``) or an internal node with a
    branching parameter h >= 1 and exactly 3h+1 ordered children.
    """

    h: int | None
    children: tuple["TreeSpec", ...] = ()

    def __post_init__(self):
        if self.h is None:
            if self.children:
                raise TreeSpecError("a leaf cannot have children")
        else:
            if not isinstance(self.h, int) or self.h < 1:
                raise TreeSpecError(f"branching parameter must be an integer >= 1, got {self.h!r}")
            if len(self.children) != 3 * self.h + 1:
                raise TreeSpecError(
                    f"a node with h={self.h} needs {3 * self.h + 1} children, "
                    f"got {len(self.children)}"
                )

    @classmethod
    def leaf(cls) -> "TreeSpec":
        return cls(None)

    @classmethod
    def internal(cls, h: int, children: Sequence["TreeSpec"]) -> "TreeSpec":
        return cls(h, tuple(children))

    @property
    def is_leaf(self) -> bool:
        return self.h is None

    @property
    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return sum(child.leaf_count for child in self.children)

    # ---- document form ----

    @classmethod
    def from_obj(cls, obj, path: str = "root") -> "TreeSpec":
        """Build from the document form, naming the offending node on error.

        A node is the string ``"leaf"`` or an object with fields ``h`` and
        ``children``; ``path`` prefixes error messages like
        ``root.children[2]``.
        """
        if obj == "leaf":
            return cls.leaf()
        if not isinstance(obj, dict):
            raise TreeSpecError(f"{path}: expected 'leaf' or an object, got {obj!r}")
        extra = set(obj) - {"h", "children"}
        if extra:
            raise TreeSpecError(f"{path}: unknown fields {sorted(extra)}")
        if "h" not in obj or "children" not in obj:
            raise TreeSpecError(f"{path}: an internal node needs 'h' and 'children'")
        h = obj["h"]
        if not isinstance(h, int) or isinstance(h, bool) or h < 1:
            raise TreeSpecError(f"{path}: branching parameter must be an integer >= 1, got {h!r}")
        children = obj["children"]
        if not isinstance(children, list):
            raise TreeSpecError(f"{path}: 'children' must be a list")
        if len(children) != 3 * h + 1:
            raise TreeSpecError(
                f"{path}: a node with h={h} needs {3 * h + 1} children, got {len(children)}"
            )
        return cls.internal(
            h,
            [
                cls.from_obj(child, f"{path}.children[{i}]")
                for i, child in enumerate(children)
            ],
        )

    @classmethod
    def from_text(cls, text: str) -> "TreeSpec":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TreeSpecError(f"unparseable tree document: {exc}") from exc
        return cls.from_obj(obj)

    def to_obj(self):
        if self.is_leaf:
            return "leaf"
        return {"h": self.h, "children": [child.to_obj() for child in self.children]}

    def to_text(self) -> str:
        return json.dumps(self.to_obj()) + "\n"


@dataclass(frozen=True)
class WeightedOrgraph:
    """An orgraph with a positive rational weight per vertex, summing to 1."""

    graph: Orgraph
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise ValueError("one weight per vertex required")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        if sum(self.weights, Fraction(0)) != 1:
            raise ValueError("weights must sum to 1")


def from_tree_spec(spec: TreeSpec) -> WeightedOrgraph:
    """Realize a tree specification as a weighted orgraph on its leaves.

    Leaves are indexed in depth-first order.  Each leaf's weight is the
    product of 1/(3h+1) over its ancestors.  Two leaves are joined by an
    edge according to the circulant rule at their deepest common ancestor:
    with child positions i (first leaf) and j (second) under a node with
    parameter h, the edge runs first -> second iff (j - i) mod (3h+1) is
    in 1..h.
    """
    paths: list[list[tuple[int, int]]] = []  # per leaf: (h of node, child index)
    weights: list[Fraction] = []

    def walk(node: TreeSpec, prefix: list[tuple[int, int]], weight: Fraction):
        if node.is_leaf:
            paths.append(list(prefix))
            weights.append(weight)
            return
        share = Fraction(1, 3 * node.h + 1)
        for index, child in enumerate(node.children):
            prefix.append((node.h, index))
            walk(child, prefix, weight * share)
            prefix.pop()

    walk(spec, [], Fraction(1))
    n = len(paths)
    masks = [0] * n
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            # deepest common ancestor = first differing path entry
            for (hx, ix), (hy, iy) in zip(paths[x], paths[y]):
                if ix != iy:
                    if (iy - ix) % (3 * hx + 1) <= hx:
                        masks[x] |= 1 << y
                    break
    return WeightedOrgraph(Orgraph(n, masks), tuple(weights))


def weighted_out_measure(weighted: WeightedOrgraph, v: int) -> Fraction:
    """Total weight of the out-neighbors of ``v``."""
    graph = weighted.graph
    return sum(
        (weighted.weights[w] for w in graph.out_neighbors(v)), Fraction(0)
    )


def is_uniform(weighted: WeightedOrgraph) -> bool:
    """True when all vertex weights are equal."""
    return len(set(weighted.weights)) <= 1


def is_biregular(weighted: WeightedOrgraph) -> bool:
    """True when all outdegrees agree and all indegrees agree."""
    graph = weighted.graph
    if graph.n == 0:
        return True
    return (
        len({graph.out_degree(v) for v in range(graph.n)}) == 1
        and len({graph.in_degree(v) for v in range(graph.n)}) == 1
    )
