"""Exact minimum dominating set and minimum co-even dominating set.

A dominating set D has every vertex outside D adjacent to some member; it is
co-even when additionally every vertex outside D has even degree.  Vertices of
odd or zero degree therefore belong to every co-even dominating set, which
makes the forced-set reduction the workhorse here: the search only ever adds
vertices of even nonzero degree on top of the forced kernel.

The search itself is iterative deepening on the number of added vertices with
branch-and-bound (branch on an undominated vertex with the fewest candidate
dominators; prune with the standard set-cover coverage bound).  A second pass
at the optimal cardinality walks candidate combinations in lexicographic
order, so the reported witness is the lexicographically smallest minimum set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import Graph, VertexSet, parity_profile


class SearchBudgetExceeded(Exception):
    """Raised when a solver call runs past its wall-clock limit."""


@dataclass(frozen=True, slots=True)
class DominationResult:
    value: int
    witness: VertexSet
    kind: str  # "plain" | "coeven"


def forced_set(g: Graph) -> VertexSet:
    """Vertices of odd or zero degree: members of every co-even dominating set."""
    p = parity_profile(g)
    return p.odd | p.zero


def is_dominating(g: Graph, d: VertexSet) -> bool:
    if d.n != g.n:
        raise ValueError(f"vertex set over n={d.n}, graph has n={g.n}")
    for v in range(g.n):
        if d.mask >> v & 1:
            continue
        if not any(d.mask >> u & 1 for u in g.adj[v]):
            return False
    return True


def is_coeven_dominating(g: Graph, d: VertexSet) -> bool:
    """Dominating, and every vertex outside d has even degree (hence degree >= 2)."""
    if d.n != g.n:
        raise ValueError(f"vertex set over n={d.n}, graph has n={g.n}")
    for v in range(g.n):
        if d.mask >> v & 1 == 0 and len(g.adj[v]) % 2:
            return False
    return is_dominating(g, d)


class _CoverSearch:
    """Minimum number of candidates whose closed neighborhoods cover a target set."""

    def __init__(self, n: int, closed: list[int], candidates: list[int], deadline: float | None):
        self.closed = closed
        self.candidates = candidates
        self.deadline = deadline
        self.ticks = 0
        # dominators_of[v]: candidates covering v, ascending.  A candidate that
        # was already picked cannot reappear here for a still-undominated v.
        self.dominators_of = [[c for c in candidates if closed[c] >> v & 1] for v in range(n)]
        # suffix_cover[i]: union coverage of candidates[i:], for lex-pass pruning.
        suffix = [0] * (len(candidates) + 1)
        for i in range(len(candidates) - 1, -1, -1):
            suffix[i] = suffix[i + 1] | closed[candidates[i]]
        self.suffix_cover = suffix
        self.fail_depth: dict[int, int] = {}
        self.lex_fail_depth: dict[tuple[int, int], int] = {}

    def _tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and self.ticks % 64 == 0 and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded

    def minimum(self, universe: int) -> tuple[int, tuple[int, ...]]:
        if universe == 0:
            return 0, ()
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded
        if universe & ~self.suffix_cover[0]:
            raise ValueError("target contains vertices no candidate can dominate")
        for k in range(1, len(self.candidates) + 1):
            if self._feasible(universe, k):
                extras = self._lex_smallest(universe, 0, k)
                assert extras is not None and len(extras) == k
                return k, extras
        raise AssertionError("unreachable: full candidate set is a cover")

    def _feasible(self, und: int, k: int) -> bool:
        if und == 0:
            return True
        if k == 0:
            return False
        if self.fail_depth.get(und, 0) >= k:
            return False
        self._tick()
        need = und.bit_count()
        best_v = -1
        best_doms: list[int] = []
        best_len = 1 << 30
        max_cov = 0
        u = und
        while u:
            v = (u & -u).bit_length() - 1
            u &= u - 1
            doms = self.dominators_of[v]
            live = [c for c in doms if self.closed[c] & und]
            for c in live:
                cov = (self.closed[c] & und).bit_count()
                if cov > max_cov:
                    max_cov = cov
            if len(live) < best_len:
                best_len = len(live)
                best_v = v
                best_doms = live
        if max_cov * k < need or best_len == 0:
            self.fail_depth[und] = k
            return False
        order = sorted(best_doms, key=lambda c: (-(self.closed[c] & und).bit_count(), c))
        for c in order:
            if self._feasible(und & ~self.closed[c], k - 1):
                return True
        self.fail_depth[und] = k
        return False

    def _lex_smallest(self, und: int, start: int, k: int) -> tuple[int, ...] | None:
        if k == 0:
            return () if und == 0 else None
        if und == 0:
            # cannot happen when k came from the minimum: a shorter cover would exist
            return ()
        if len(self.candidates) - start < k:
            return None
        if und & ~self.suffix_cover[start]:
            return None
        key = (und, start)
        if self.lex_fail_depth.get(key, 0) >= k:
            return None
        self._tick()
        max_cov = 0
        for i in range(start, len(self.candidates)):
            cov = (self.closed[self.candidates[i]] & und).bit_count()
            if cov > max_cov:
                max_cov = cov
        if max_cov * k < und.bit_count():
            self.lex_fail_depth[key] = k
            return None
        for i in range(start, len(self.candidates)):
            c = self.candidates[i]
            rest = und & ~self.closed[c]
            if rest == und:
                continue  # no new coverage: c appears in no minimum witness here
            tail = self._lex_smallest(rest, i + 1, k - 1)
            if tail is not None:
                return (c, *tail)
        self.lex_fail_depth[key] = k
        return None


def _closed_neighborhoods(g: Graph) -> list[int]:
    closed = []
    for v in range(g.n):
        m = 1 << v
        for u in g.adj[v]:
            m |= 1 << u
        closed.append(m)
    return closed


def _deadline(time_limit: float | None) -> float | None:
    return None if time_limit is None else time.monotonic() + time_limit


def domination_number(g: Graph, time_limit: float | None = None) -> DominationResult:
    """Exact domination number with the lexicographically smallest minimum witness."""
    if g.n == 0:
        return DominationResult(0, VertexSet(0, 0), "plain")
    search = _CoverSearch(g.n, _closed_neighborhoods(g), list(range(g.n)), _deadline(time_limit))
    k, chosen = search.minimum((1 << g.n) - 1)
    return DominationResult(k, VertexSet.of(g.n, chosen), "plain")


def coeven_domination_number(g: Graph, time_limit: float | None = None) -> DominationResult:
    """Exact co-even domination number; the witness always contains the forced set."""
    if g.n == 0:
        return DominationResult(0, VertexSet(0, 0), "coeven")
    closed = _closed_neighborhoods(g)
    forced = forced_set(g)
    dominated = 0
    for v in forced:
        dominated |= closed[v]
    candidates = [v for v in range(g.n) if forced.mask >> v & 1 == 0]
    search = _CoverSearch(g.n, closed, candidates, _deadline(time_limit))
    k, extras = search.minimum((1 << g.n) - 1 & ~dominated)
    witness = forced.mask
    for c in extras:
        witness |= 1 << c
    return DominationResult(len(forced) + k, VertexSet(g.n, witness), "coeven")
