"""The four binary graph operations: join, corona, neighbourhood corona, Hajos sum.

Every operation returns the product graph together with an index map recording
where each output vertex came from, so solver witnesses on products can be
traced back to factor vertices.

Index conventions:
  * join(g, h): g keeps 0..n_g-1, h is shifted by n_g.
  * corona / neighbourhood corona: g at 0..n_g-1; copy i of h occupies the
    block n_g + i*n_h .. n_g + (i+1)*n_h - 1.
  * hajos_sum: the merged vertex gets index 0, then the remaining g1 vertices
    in ascending order, then the remaining g2 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import MAX_GRAPH6_VERTICES, Graph


@dataclass(frozen=True, slots=True)
class HajosSpec:
    """Oriented edge pair for a Hajos sum.

    Each edge is written (x, y): x is the endpoint that gets identified with
    the other factor's x, y keeps its edge role.  Both orientations of the
    same undirected edge are distinct specs and give different sums.
    """

    e1: tuple[int, int]
    e2: tuple[int, int]

    def __post_init__(self) -> None:
        if self.e1[0] == self.e1[1] or self.e2[0] == self.e2[1]:
            raise ValueError("edge endpoints must be distinct")


@dataclass(frozen=True, slots=True)
class VertexOrigin:
    """Provenance of one output vertex.

    source is "left", "right", or "merged"; ``copy`` is the copy index for
    corona-style products; for the merged Hajos vertex, ``vertex`` is the
    left factor's identified endpoint and ``right_vertex`` the right one.
    """

    source: str
    vertex: int
    copy: int | None = None
    right_vertex: int | None = None

    def to_dict(self) -> dict:
        d: dict = {"source": self.source, "vertex": self.vertex}
        if self.copy is not None:
            d["copy"] = self.copy
        if self.right_vertex is not None:
            d["right_vertex"] = self.right_vertex
        return d


@dataclass(frozen=True, slots=True)
class IndexMap:
    """Bijection from output vertex index to factor provenance."""

    origins: tuple[VertexOrigin, ...]
    merged_index: int | None = None

    def to_dicts(self) -> list[dict]:
        return [o.to_dict() for o in self.origins]


def _check_output_size(n: int, op: str) -> None:
    if n > MAX_GRAPH6_VERTICES:
        raise ValueError(f"{op} output has {n} vertices; at most {MAX_GRAPH6_VERTICES} supported (graph6 limit)")


def join(g: Graph, h: Graph) -> tuple[Graph, IndexMap]:
    """Disjoint union of g and h plus every edge between the two sides."""
    n = g.n + h.n
    _check_output_size(n, "join")
    h_block = frozenset(range(g.n, n))
    g_block = frozenset(range(g.n))
    adj = [g.adj[v] | h_block for v in range(g.n)]
    adj.extend(frozenset(w + g.n for w in h.adj[u]) | g_block for u in range(h.n))
    origins = [VertexOrigin("left", v) for v in range(g.n)]
    origins += [VertexOrigin("right", u) for u in range(h.n)]
    return Graph(n, tuple(adj)), IndexMap(tuple(origins))


def corona(g: Graph, h: Graph) -> tuple[Graph, IndexMap]:
    """One copy of h per vertex of g; vertex i of g is joined to all of copy i."""
    if g.n < 1:
        raise ValueError("corona needs a nonempty left factor")
    n = g.n * (1 + h.n)
    _check_output_size(n, "corona")
    adj: list[set[int]] = [set(g.adj[v]) for v in range(g.n)]
    origins = [VertexOrigin("left", v) for v in range(g.n)]
    for i in range(g.n):
        base = g.n + i * h.n
        for u in range(h.n):
            adj.append({base + w for w in h.adj[u]} | {i})
            adj[i].add(base + u)
            origins.append(VertexOrigin("right", u, copy=i))
    return Graph(n, tuple(frozenset(s) for s in adj)), IndexMap(tuple(origins))


def neighbourhood_corona(g: Graph, h: Graph) -> tuple[Graph, IndexMap]:
    """One copy of h per vertex of g; the neighbours of vertex i are joined to copy i."""
    if g.n < 1:
        raise ValueError("neighbourhood corona needs a nonempty left factor")
    n = g.n * (1 + h.n)
    _check_output_size(n, "neighbourhood corona")
    adj: list[set[int]] = [set(g.adj[v]) for v in range(g.n)]
    origins = [VertexOrigin("left", v) for v in range(g.n)]
    for i in range(g.n):
        base = g.n + i * h.n
        nbrs_of_i = g.adj[i]
        for u in range(h.n):
            adj.append({base + w for w in h.adj[u]} | set(nbrs_of_i))
            for x in nbrs_of_i:
                adj[x].add(base + u)
            origins.append(VertexOrigin("right", u, copy=i))
    return Graph(n, tuple(frozenset(s) for s in adj)), IndexMap(tuple(origins))


def hajos_sum(g1: Graph, g2: Graph, spec: HajosSpec) -> tuple[Graph, IndexMap]:
    """Delete e1 from g1 and e2 from g2, identify the two x endpoints, add y1-y2.

    The merged vertex keeps every surviving edge of both x endpoints; y1 and y2
    keep their degrees (each loses its x edge and gains the new y1-y2 edge).
    """
    x1, y1 = spec.e1
    x2, y2 = spec.e2
    if not g1.has_edge(x1, y1):
        raise ValueError(f"edge ({x1},{y1}) not present in left factor")
    if not g2.has_edge(x2, y2):
        raise ValueError(f"edge ({x2},{y2}) not present in right factor")
    n = g1.n + g2.n - 1
    _check_output_size(n, "hajos sum")

    map1 = {x1: 0}
    nxt = 1
    for v in range(g1.n):
        if v != x1:
            map1[v] = nxt
            nxt += 1
    map2 = {x2: 0}
    for v in range(g2.n):
        if v != x2:
            map2[v] = nxt
            nxt += 1

    adj: list[set[int]] = [set() for _ in range(n)]

    def add(a: int, b: int) -> None:
        adj[a].add(b)
        adj[b].add(a)

    for u, v in g1.edges():
        if {u, v} != {x1, y1}:
            add(map1[u], map1[v])
    for u, v in g2.edges():
        if {u, v} != {x2, y2}:
            add(map2[u], map2[v])
    add(map1[y1], map2[y2])

    origins = [VertexOrigin("merged", x1, right_vertex=x2)]
    origins += [VertexOrigin("left", v) for v in range(g1.n) if v != x1]
    origins += [VertexOrigin("right", v) for v in range(g2.n) if v != x2]
    return Graph(n, tuple(frozenset(s) for s in adj)), IndexMap(tuple(origins), merged_index=0)
