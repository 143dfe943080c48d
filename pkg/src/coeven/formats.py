"""Text encodings for small simple graphs: graph6, edge-list, and DOT.

graph6 support is short form only (n <= 62): one header byte chr(n+63), then
the upper triangle of the adjacency matrix in column-major order -- bit k of
the stream is edge (i, j) where pairs run (0,1),(0,2),(1,2),(0,3),... -- packed
six bits per byte, most significant bit first, each byte offset by 63.
"""

from __future__ import annotations

from .graphs import MAX_GRAPH6_VERTICES, Graph, VertexSet


class Graph6Error(ValueError):
    """Malformed graph6 input; ``position`` is the byte offset of the defect."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (byte {position})")
        self.position = position


def to_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_VERTICES:
        raise ValueError(f"graph6 short form supports at most {MAX_GRAPH6_VERTICES} vertices, got {g.n}")
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = acc << 1 | (1 if i in g.adj[j] else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 string; round-trips :func:`to_graph6` exactly."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    head = ord(s[0])
    if head == 126:
        raise Graph6Error("long-form graph6 (n > 62) not supported", 0)
    if not 63 <= head <= 125:
        raise Graph6Error(f"invalid size byte {s[0]!r}", 0)
    n = head - 63
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = s[1:]
    if len(body) < need_bytes:
        raise Graph6Error(f"truncated: need {need_bytes} data bytes, got {len(body)}", len(s))
    if len(body) > need_bytes:
        raise Graph6Error("unexpected trailing data", 1 + need_bytes)
    bits: list[int] = []
    for pos, ch in enumerate(body, start=1):
        c = ord(ch)
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid data byte {ch!r}", pos)
        v = c - 63
        bits.extend(v >> k & 1 for k in (5, 4, 3, 2, 1, 0))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                nbrs[i].append(j)
                nbrs[j].append(i)
            k += 1
    return Graph(n, tuple(frozenset(s_) for s_ in nbrs))


def to_edgelist(g: Graph) -> str:
    """Plain text form: first line "n m", then one "u v" line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty edge-list input")
    if len(rows[0]) != 2:
        raise ValueError('edge-list header must be "n m"')
    n, m = (int(x) for x in rows[0])
    if len(rows) - 1 != m:
        raise ValueError(f"edge-list declares {m} edges but has {len(rows) - 1} edge lines")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"bad edge line: {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))
    from .graphs import new_graph

    return new_graph(n, edges)


def to_dot(g: Graph, highlight: VertexSet | None = None) -> str:
    """Render as an undirected DOT graph; highlighted vertices are drawn filled."""
    if highlight is not None and highlight.n != g.n:
        raise ValueError(f"highlight set is over n={highlight.n}, graph has n={g.n}")
    marked = highlight.mask if highlight is not None else 0
    lines = ["graph G {", "  node [shape=circle];"]
    for v in range(g.n):
        if marked >> v & 1:
            lines.append(f"  {v} [style=filled fillcolor=black fontcolor=white];")
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
