"""Immutable simple graphs: construction, parity queries, named families, enumeration.

Vertices are dense integer labels 0..n-1 throughout; adjacency is a tuple of
frozensets so graphs are hashable and safe to share across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

#: Largest vertex count representable in short-form graph6.
MAX_GRAPH6_VERTICES = 62

#: Largest vertex count accepted by exhaustive enumeration.
MAX_ENUMERATION_VERTICES = 7


@dataclass(frozen=True, slots=True)
class VertexSet:
    """A subset of the vertices 0..n-1 of an n-vertex graph, stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"vertex set members out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.mask >> v & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def _check_compatible(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError(f"vertex sets over different graphs (n={self.n} vs n={other.n})")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_compatible(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_compatible(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_compatible(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def issubset(self, other: "VertexSet") -> bool:
        self._check_compatible(other)
        return self.mask & ~other.mask == 0


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph: vertex count plus per-vertex neighbor sets.

    The adjacency tuple is trusted as given; use :func:`new_graph` to build a
    graph from an edge list with full validation.  Equality and hashing ignore
    the optional name.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    name: str | None = field(default=None, compare=False)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def relabeled(self, name: str | None) -> "Graph":
        return Graph(self.n, self.adj, name)


@dataclass(frozen=True, slots=True)
class ParityProfile:
    """The partition of a graph's vertices by degree parity.

    Degree-0 vertices are classified as even and additionally listed in
    ``zero``, so consumers needing "odd or isolated" take ``odd | zero``.
    """

    odd: VertexSet
    even: VertexSet
    zero: VertexSet


def new_graph(n: int, edges: Iterable[tuple[int, int]], name: str | None = None) -> Graph:
    """Build a simple graph from an edge list, deduplicating repeated pairs.

    Rejects self-loops and endpoints outside 0..n-1.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has endpoint outside 0..{n - 1}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in nbrs), name)


def parity_profile(g: Graph) -> ParityProfile:
    odd = even = zero = 0
    for v in range(g.n):
        d = len(g.adj[v])
        if d % 2:
            odd |= 1 << v
        else:
            even |= 1 << v
            if d == 0:
                zero |= 1 << v
    return ParityProfile(VertexSet(g.n, odd), VertexSet(g.n, even), VertexSet(g.n, zero))


def is_connected(g: Graph) -> bool:
    """True iff g has exactly one component; the empty graph is not connected."""
    if g.n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return new_graph(n, itertools.combinations(range(n), 2), name=f"K{n}")


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs nonempty parts")
    return new_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)], name=f"K{a},{b}")


def star_graph(n: int) -> Graph:
    """Star on n vertices total: center 0 joined to n-1 leaves."""
    if n < 2:
        raise ValueError("star needs at least 2 vertices")
    return new_graph(n, [(0, i) for i in range(1, n)], name=f"S{n}")


def wheel_graph(n: int) -> Graph:
    """Wheel on n vertices total: hub 0 joined to a cycle on 1..n-1."""
    if n < 4:
        raise ValueError("wheel needs at least 4 vertices")
    rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
    hub = [(0, i) for i in range(1, n)]
    return new_graph(n, rim + hub, name=f"W{n}")


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    return new_graph(n, [], name=f"E{n}")


_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "complete": (complete_graph, 1),
    "complete_bipartite": (complete_bipartite_graph, 2),
    "star": (star_graph, 1),
    "wheel": (wheel_graph, 1),
    "empty": (empty_graph, 1),
}


def generate(family: str, *params: int) -> Graph:
    """Dispatch to a named family: path/cycle/complete/complete_bipartite/star/wheel/empty."""
    try:
        builder, arity = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r} (choose from {sorted(_FAMILIES)})") from None
    if len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


# ---------------------------------------------------------------------------
# Exhaustive enumeration of labeled connected graphs
# ---------------------------------------------------------------------------

_CHUNK = 1 << 18


def _edge_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _connected_mask_chunks(n: int) -> Iterator[np.ndarray]:
    """Yield, in ascending order, the edge bitmasks of connected labeled graphs.

    Connectivity of a whole chunk of masks is decided at once: per-vertex
    neighbor bitmasks are assembled with vectorized bit arithmetic, then the
    set reachable from vertex 0 is expanded n-1 times.
    """
    pairs = _edge_pairs(n)
    total = 1 << len(pairs)
    full = (1 << n) - 1
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        adj = [np.zeros(masks.shape, dtype=np.int64) for _ in range(n)]
        for b, (i, j) in enumerate(pairs):
            has = (masks >> b) & 1
            adj[i] |= has << j
            adj[j] |= has << i
        reach = np.ones_like(masks)
        for _ in range(n - 1):
            nxt = reach
            for v in range(n):
                nxt = nxt | np.where((reach >> v) & 1 == 1, adj[v], 0)
            if np.array_equal(nxt, reach):
                break
            reach = nxt
        yield masks[reach == full]


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Yield every labeled simple connected graph on n vertices exactly once.

    Deterministic order: ascending edge bitmask, where bit k corresponds to
    the k-th pair in lexicographic order (0,1),(0,2),...,(n-2,n-1).
    """
    if not 1 <= n <= MAX_ENUMERATION_VERTICES:
        raise ValueError(f"enumeration supports 1..{MAX_ENUMERATION_VERTICES} vertices, got {n}")
    pairs = _edge_pairs(n)
    for chunk in _connected_mask_chunks(n):
        for mask in chunk.tolist():
            nbrs: list[list[int]] = [[] for _ in range(n)]
            for b, (i, j) in enumerate(pairs):
                if mask >> b & 1:
                    nbrs[i].append(j)
                    nbrs[j].append(i)
            yield Graph(n, tuple(frozenset(s) for s in nbrs))
