"""Closed-form values and bounds for co-even domination under the four operations.

Each evaluator implements one published rule exactly as stated, including its
applicability conditions, and reports which case fired via a stable branch
identifier.  Evaluators never consult the exact solver to "fix" a value: when
a rule's claim disagrees with the oracle, the verification harness records a
discrepancy instead.  The one exception is the regular-graph rule, which by
its own statement delegates to the plain domination number for even degree.

Branch identifiers (fixed vocabulary, also used verbatim in reports):
  join.i.exact, join.i.otherwise, join.ii.exact, join.ii.otherwise,
  join.iii.exact, join.iii.otherwise, corona.k1, corona.i, corona.ii.even,
  corona.ii.odd, ncorona.range, hajos.upper, hajos.conj_lower,
  regular.odd, regular.even.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, is_connected, parity_profile
from .solver import domination_number

EXACT = "exact"
UPPER_BOUND = "upper_bound"
LOWER_BOUND = "lower_bound"
RANGE = "range"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True, slots=True)
class EvalResult:
    """Outcome of evaluating one rule on concrete operands."""

    kind: str
    branch: str
    value: int | None = None
    lo: int | None = None
    hi: int | None = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.kind == RANGE and (self.lo is None or self.hi is None or self.lo > self.hi):
            raise ValueError("range result needs lo <= hi")
        if self.kind in (EXACT, UPPER_BOUND, LOWER_BOUND) and self.value is None:
            raise ValueError(f"{self.kind} result needs a value")

    @classmethod
    def exact(cls, value: int, branch: str, note: str = "") -> "EvalResult":
        return cls(EXACT, branch, value=value, note=note)

    @classmethod
    def upper(cls, value: int, branch: str, note: str = "") -> "EvalResult":
        return cls(UPPER_BOUND, branch, value=value, note=note)

    @classmethod
    def lower(cls, value: int, branch: str, note: str = "") -> "EvalResult":
        return cls(LOWER_BOUND, branch, value=value, note=note)

    @classmethod
    def range(cls, lo: int, hi: int, branch: str, note: str = "") -> "EvalResult":
        return cls(RANGE, branch, lo=lo, hi=hi, note=note)

    @classmethod
    def not_applicable(cls, reason: str, branch: str) -> "EvalResult":
        return cls(NOT_APPLICABLE, branch, note=reason)

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind, "branch": self.branch}
        if self.value is not None:
            d["value"] = self.value
        if self.lo is not None:
            d["lo"] = self.lo
        if self.hi is not None:
            d["hi"] = self.hi
        if self.note:
            d["note"] = self.note
        return d


def coeven_regular(g: Graph) -> EvalResult:
    """r-regular graphs: all n vertices when r is odd, the plain domination
    number when r is even."""
    if g.n == 0:
        return EvalResult.not_applicable("empty graph", "regular")
    degs = set(g.degrees())
    if len(degs) != 1:
        return EvalResult.not_applicable("not regular", "regular")
    r = degs.pop()
    if r % 2:
        return EvalResult.exact(g.n, "regular.odd")
    return EvalResult.exact(domination_number(g).value, "regular.even")


def coeven_join(g: Graph, h: Graph) -> EvalResult:
    """Join rule: three order-parity cases, each with an exact branch when the
    required parity classes are inhabited and a claimed <= 2 fallback otherwise."""
    if not (is_connected(g) and is_connected(h)):
        return EvalResult.not_applicable("both factors must be connected", "join")
    # case (iii) is stated with the even-order factor first; normalize.
    if g.n % 2 == 1 and h.n % 2 == 0:
        g, h = h, g
    pg, ph = parity_profile(g), parity_profile(h)
    if g.n % 2 == 0 and h.n % 2 == 0:
        if len(pg.odd) and len(ph.odd):
            return EvalResult.exact(len(pg.odd) + len(ph.odd), "join.i.exact")
        return EvalResult.upper(2, "join.i.otherwise")
    if g.n % 2 == 1 and h.n % 2 == 1:
        if len(pg.even) and len(ph.even):
            return EvalResult.exact(len(pg.even) + len(ph.even), "join.ii.exact")
        return EvalResult.upper(2, "join.ii.otherwise")
    if len(pg.even) and len(ph.odd):
        return EvalResult.exact(len(pg.even) + len(ph.odd), "join.iii.exact")
    return EvalResult.upper(2, "join.iii.otherwise")


def _is_k1(h: Graph) -> bool:
    return h.n == 1 and h.m == 0


def coeven_corona(g: Graph, h: Graph) -> EvalResult:
    """Corona rule: pendant case for h = K1, all-odd case, and the two
    even-vertex cases split on the parity of |V(h)|."""
    if not is_connected(g):
        return EvalResult.not_applicable("left factor must be connected", "corona")
    pg = parity_profile(g)
    if _is_k1(h):
        return EvalResult.exact(g.n + len(pg.even), "corona.k1")
    if not is_connected(h):
        return EvalResult.not_applicable("right factor must be connected", "corona")
    ph = parity_profile(h)
    if len(ph.odd) == h.n:
        return EvalResult.exact(g.n, "corona.i")
    if h.n % 2 == 0:
        return EvalResult.exact(g.n * len(ph.even) + len(pg.odd), "corona.ii.even")
    return EvalResult.exact(g.n * len(ph.even) + len(pg.even), "corona.ii.odd")


def coeven_ncorona_bounds(g: Graph, h: Graph) -> EvalResult:
    """Neighbourhood corona: proven two-sided bounds from the parity mix of
    the factors.  Restricted to left factors with at least two vertices, since
    a single-vertex left factor leaves its copy disconnected."""
    if g.n < 2:
        return EvalResult.not_applicable("left factor needs at least 2 vertices", "ncorona")
    if not (is_connected(g) and is_connected(h)):
        return EvalResult.not_applicable("both factors must be connected", "ncorona")
    pg, ph = parity_profile(g), parity_profile(h)
    lo = len(pg.odd) * len(ph.even) + len(pg.even) * len(ph.odd)
    return EvalResult.range(lo, g.n + lo, "ncorona.range")


def coeven_hajos_upper(gamma1: int, gamma2: int) -> EvalResult:
    """Proven upper bound for a Hajos sum in terms of the factor values."""
    return EvalResult.upper(gamma1 + gamma2 + 1, "hajos.upper")


def coeven_hajos_conjectured_lower(gamma1: int, gamma2: int) -> EvalResult:
    """Conjectured lower bound for a Hajos sum; floored at zero."""
    return EvalResult.lower(max(0, gamma1 + gamma2 - 2), "hajos.conj_lower", note="conjectural")
