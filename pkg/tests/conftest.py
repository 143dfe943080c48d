"""Shared test oracles, deliberately independent of the package internals.

The naive solvers below work straight off an edge list with their own
adjacency handling and exhaustive subset enumeration, so they can arbitrate
the branch-and-bound solver rather than share code with it.
"""

from __future__ import annotations

import itertools

import pytest

from coeven import Graph, new_graph


def naive_adjacency(n: int, edges) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def naive_is_dominating(n: int, edges, subset) -> bool:
    adj = naive_adjacency(n, edges)
    chosen = set(subset)
    return all(v in chosen or adj[v] & chosen for v in range(n))


def naive_is_coeven_dominating(n: int, edges, subset) -> bool:
    adj = naive_adjacency(n, edges)
    chosen = set(subset)
    for v in range(n):
        if v not in chosen and len(adj[v]) % 2:
            return False
    return naive_is_dominating(n, edges, subset)


def _naive_minimum(n: int, edges, predicate) -> tuple[int, tuple[int, ...]]:
    """Smallest subset passing the predicate, lexicographically first among ties."""
    for k in range(n + 1):
        for combo in itertools.combinations(range(n), k):
            if predicate(n, edges, combo):
                return k, combo
    raise AssertionError("the full vertex set always dominates")


def naive_domination(g: Graph) -> tuple[int, tuple[int, ...]]:
    if g.n == 0:
        return 0, ()
    return _naive_minimum(g.n, g.edges(), naive_is_dominating)


def naive_coeven_domination(g: Graph) -> tuple[int, tuple[int, ...]]:
    if g.n == 0:
        return 0, ()
    return _naive_minimum(g.n, g.edges(), naive_is_coeven_dominating)


def union_find_connected(n: int, edges) -> bool:
    if n == 0:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)}) == 1


@pytest.fixture
def paw() -> Graph:
    """Triangle 0,1,2 with a pendant 3 hanging off vertex 0."""
    return new_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)], name="paw")
