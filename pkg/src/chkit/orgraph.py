"""Core oriented-graph type: construction, degree queries, isomorphism, text I/O.

An oriented graph ("orgraph") is a directed graph with no loops and at most
one edge between any unordered pair of vertices, i.e. no anti-parallel pairs.
Vertices are dense integer indices 0..n-1.  Adjacency is stored as one
out-neighbor bitmask per vertex, so the neighborhood intersections that
dominate the verifier and the enumerator are single ``&`` operations.

Orgraph instances are immutable and hashable.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Orgraph",
    "OrgraphError",
    "LoopError",
    "AntiParallelError",
    "DuplicateEdgeError",
    "VertexRangeError",
    "GraphTextError",
]


class OrgraphError(ValueError):
    """Malformed orgraph data or an invalid orgraph operation."""


class LoopError(OrgraphError):
    """An edge from a vertex to itself."""


class AntiParallelError(OrgraphError):
    """Both u->v and v->u were requested for the same pair."""


class DuplicateEdgeError(OrgraphError):
    """The same directed edge was given twice."""


class VertexRangeError(OrgraphError):
    """A vertex index outside 0..n-1."""


class GraphTextError(OrgraphError):
    """Unparseable graph text."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _rank(values: list) -> list[int]:
    """Rank a list by sorted order of its (comparable) entries, ties shared."""
    index = {value: i for i, value in enumerate(sorted(set(values)))}
    return [index[value] for value in values]


class Orgraph:
    """Immutable oriented graph on vertices 0..n-1.

    Build instances with :meth:`from_edges` or :meth:`from_text`; the raw
    constructor accepts a sequence of out-neighbor bitmasks and validates
    the no-loop / no-anti-parallel invariants.
    """

    __slots__ = ("_n", "_out", "_in", "_canon")

    def __init__(self, n: int, out_masks: Sequence[int]):
        if n < 0:
            raise VertexRangeError(f"vertex count must be >= 0, got {n}")
        if len(out_masks) != n:
            raise OrgraphError(f"expected {n} out-masks, got {len(out_masks)}")
        full = (1 << n) - 1
        in_masks = [0] * n
        for v, mask in enumerate(out_masks):
            if mask < 0 or mask & ~full:
                raise VertexRangeError(f"out-mask of vertex {v} references vertices >= {n}")
            if (mask >> v) & 1:
                raise LoopError(f"loop at vertex {v}")
            for w in _bits(mask):
                in_masks[w] |= 1 << v
        for v in range(n):
            if out_masks[v] & in_masks[v]:
                w = next(_bits(out_masks[v] & in_masks[v]))
                raise AntiParallelError(f"anti-parallel pair between {v} and {w}")
        self._n = n
        self._out = tuple(out_masks)
        self._in = tuple(in_masks)
        self._canon: tuple | None = None

    # ---- construction ----

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Orgraph":
        """Build an orgraph from directed edges, rejecting malformed input.

        Raises LoopError, AntiParallelError, DuplicateEdgeError or
        VertexRangeError; each condition gets its own error type so callers
        can tell a typo from a structural problem.
        """
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if (masks[u] >> v) & 1:
                raise DuplicateEdgeError(f"edge ({u}, {v}) given twice")
            if (masks[v] >> u) & 1:
                raise AntiParallelError(f"anti-parallel pair between {u} and {v}")
            masks[u] |= 1 << v
        return cls(n, masks)

    # ---- basic queries ----

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self._out)

    def edges(self) -> list[tuple[int, int]]:
        """All directed edges, sorted lexicographically."""
        return [(u, v) for u in range(self._n) for v in _bits(self._out[u])]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._out[u] >> v) & 1)

    def independent(self, u: int, v: int) -> bool:
        """True when u != v and neither direction is an edge."""
        return u != v and not ((self._out[u] >> v) & 1 or (self._out[v] >> u) & 1)

    def out_mask(self, v: int) -> int:
        return self._out[v]

    def in_mask(self, v: int) -> int:
        return self._in[v]

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._out[v]))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self._in[v]))

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def min_out_degree(self) -> int:
        if self._n == 0:
            raise OrgraphError("min out-degree of an empty graph is undefined")
        return min(mask.bit_count() for mask in self._out)

    # ---- cycles ----

    def is_c3_free(self) -> bool:
        """True when no directed triangle u->v->w->u exists."""
        for v in range(self._n):
            for w in _bits(self._out[v]):
                # a triangle through v->w needs some z with w->z and z->v
                if self._out[w] & self._in[v]:
                    return False
        return True

    def girth(self) -> int | None:
        """Length of a shortest directed cycle, or None when acyclic."""
        best: int | None = None
        for start in range(self._n):
            dist = {start: 0}
            frontier = 1 << start
            seen = frontier
            step = 0
            while frontier:
                step += 1
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self._out[v]
                nxt &= ~seen
                seen |= nxt
                for v in _bits(nxt):
                    dist[v] = step
                frontier = nxt
            for u in _bits(self._in[start]):
                if u in dist and (best is None or dist[u] + 1 < best):
                    best = dist[u] + 1
        return best

    # ---- derived graphs ----

    def induced_subgraph(self, vertices: Iterable[int]) -> "Orgraph":
        """Subgraph induced on ``vertices``, relabeled 0..k-1 in sorted order."""
        order = sorted(set(vertices))
        for v in order:
            if not 0 <= v < self._n:
                raise VertexRangeError(f"vertex {v} outside 0..{self._n - 1}")
        position = {v: i for i, v in enumerate(order)}
        masks = []
        keep = 0
        for v in order:
            keep |= 1 << v
        for v in order:
            mask = 0
            for w in _bits(self._out[v] & keep):
                mask |= 1 << position[w]
            masks.append(mask)
        return Orgraph(len(order), masks)

    def relabel(self, perm: Sequence[int]) -> "Orgraph":
        """Image of the graph under ``perm`` (old index -> new index)."""
        n = self._n
        if sorted(perm) != list(range(n)):
            raise OrgraphError("relabeling must be a permutation of 0..n-1")
        masks = [0] * n
        for v in range(n):
            mask = 0
            for w in _bits(self._out[v]):
                mask |= 1 << perm[w]
            masks[perm[v]] = mask
        return Orgraph(n, masks)

    def add_vertex(self, out_to: int = 0, in_from: int = 0) -> "Orgraph":
        """New graph with vertex n appended; masks select its neighbors."""
        n = self._n
        masks = list(self._out)
        for v in _bits(in_from):
            masks[v] |= 1 << n
        masks.append(out_to)
        return Orgraph(n + 1, masks)

    # ---- isomorphism ----

    def _stable_invariants(self) -> tuple[list[int], list]:
        """Iterated degree refinement.

        Returns (ranks, values): per-vertex integer ranks inducing the stable
        partition, plus the per-vertex invariant values of the final round
        (comparable across graphs).
        """
        n = self._n
        if n == 0:
            return [], []
        values: list = [
            (self._out[v].bit_count(), self._in[v].bit_count()) for v in range(n)
        ]
        ranks = _rank(values)
        while True:
            values = [
                (
                    ranks[v],
                    tuple(sorted(ranks[w] for w in _bits(self._out[v]))),
                    tuple(sorted(ranks[w] for w in _bits(self._in[v]))),
                )
                for v in range(n)
            ]
            new_ranks = _rank(values)
            if new_ranks == ranks:
                return ranks, values
            ranks = new_ranks

    def canonical_key(self) -> tuple:
        """Hashable key identifying the isomorphism class.

        The key is the lexicographically smallest tuple of out-masks over all
        vertex orderings consistent with the stable degree-refinement
        partition.  Intended for small graphs (the enumerator stays at
        n <= 8); cost grows with the automorphism-rich cell sizes.
        """
        if self._canon is None:
            n = self._n
            ranks, _ = self._stable_invariants()
            cells: dict[int, list[int]] = {}
            for v in range(n):
                cells.setdefault(ranks[v], []).append(v)
            ordered_cells = [cells[r] for r in sorted(cells)]
            out = self._out
            best: tuple[int, ...] | None = None
            perm = [0] * n
            for assignment in itertools.product(
                *(itertools.permutations(cell) for cell in ordered_cells)
            ):
                pos = 0
                for cell_perm in assignment:
                    for v in cell_perm:
                        perm[v] = pos
                        pos += 1
                rows = [0] * n
                for v in range(n):
                    mask = 0
                    for w in _bits(out[v]):
                        mask |= 1 << perm[w]
                    rows[perm[v]] = mask
                key = tuple(rows)
                if best is None or key < best:
                    best = key
            self._canon = (n, best if best is not None else ())
        return self._canon

    def canonical_form(self) -> "Orgraph":
        """Canonically labeled representative of the isomorphism class."""
        n, rows = self.canonical_key()
        return Orgraph(n, list(rows))

    def is_isomorphic_to(self, other: "Orgraph") -> bool:
        """Decide isomorphism by invariant-pruned backtracking.

        Agrees with canonical-key equality but avoids the factorial cell
        blowup of canonical_key on large symmetric graphs, so it is the
        right tool for e.g. comparing two 16-vertex products.
        """
        if self._n != other._n:
            return False
        if self.edge_count != other.edge_count:
            return False
        n = self._n
        if n == 0:
            return True
        _, values1 = self._stable_invariants()
        _, values2 = other._stable_invariants()
        if sorted(values1) != sorted(values2):
            return False
        candidates = [
            [w for w in range(n) if values2[w] == values1[v]] for v in range(n)
        ]
        order = sorted(range(n), key=lambda v: (len(candidates[v]), v))
        mapping = [-1] * n
        used = [False] * n

        def backtrack(i: int) -> bool:
            if i == n:
                return True
            v = order[i]
            for w in candidates[v]:
                if used[w]:
                    continue
                ok = True
                for j in range(i):
                    u = order[j]
                    m = mapping[u]
                    if self.has_edge(v, u) != other.has_edge(w, m) or self.has_edge(
                        u, v
                    ) != other.has_edge(m, w):
                        ok = False
                        break
                if ok:
                    mapping[v] = w
                    used[w] = True
                    if backtrack(i + 1):
                        return True
                    used[w] = False
                    mapping[v] = -1
            return False

        return backtrack(0)

    # ---- text format ----

    def to_text(self) -> str:
        """Serialize as the line-oriented text format.

        First line is ``orgraph <n>``, then one ``<u> <v>`` line per edge in
        lexicographic order, with a trailing newline.
        """
        lines = [f"orgraph {self._n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Orgraph":
        """Parse the text format; ``#`` comments and blank lines are ignored."""
        header: tuple[int] | None = None
        edges: list[tuple[int, int]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if header is None:
                if len(fields) != 2 or fields[0] != "orgraph":
                    raise GraphTextError(
                        f"line {lineno}: expected header 'orgraph <n>', got {raw!r}"
                    )
                try:
                    header = (int(fields[1]),)
                except ValueError:
                    raise GraphTextError(f"line {lineno}: bad vertex count {fields[1]!r}")
                continue
            if len(fields) != 2:
                raise GraphTextError(f"line {lineno}: expected '<u> <v>', got {raw!r}")
            try:
                edges.append((int(fields[0]), int(fields[1])))
            except ValueError:
                raise GraphTextError(f"line {lineno}: non-integer edge {raw!r}")
        if header is None:
            raise GraphTextError("missing 'orgraph <n>' header")
        return cls.from_edges(header[0], edges)

    # ---- value semantics ----

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Orgraph):
            return NotImplemented
        return self._n == other._n and self._out == other._out

    def __hash__(self) -> int:
        return hash((self._n, self._out))

    def __repr__(self) -> str:
        return f"Orgraph({self._n}, edges={self.edges()!r})"
