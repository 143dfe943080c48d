"""Rule-vs-oracle harness: scans instance families, classifies verdicts, hunts
counterexamples to the conjectured Hajos lower bound, and ships named fixtures.

A discrepancy is a first-class verdict, not a crash: exact-value claims and the
join "otherwise <= 2" fallback are audited and reported.  Violations of the two
proven bounds (the neighbourhood-corona range and the Hajos upper bound) are
counted separately as ``proven_violations`` -- those indicate a real bug and
fail the command-line ``check``.

Reports are deterministic: entries are sorted by instance id, contain no
timestamps, and runtime fields are excluded from the canonical serialization.
"""

from __future__ import annotations

import csv
import hashlib
import io
import itertools
import json
import time
from dataclasses import dataclass, field

from .formats import to_graph6
from .formulas import (
    EXACT,
    LOWER_BOUND,
    NOT_APPLICABLE,
    RANGE,
    UPPER_BOUND,
    EvalResult,
    coeven_corona,
    coeven_hajos_upper,
    coeven_join,
    coeven_ncorona_bounds,
    coeven_regular,
)
from .graphs import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    enumerate_connected,
    is_connected,
    new_graph,
    path_graph,
    star_graph,
)
from .ops import HajosSpec, corona, hajos_sum, join, neighbourhood_corona
from .solver import (
    SearchBudgetExceeded,
    coeven_domination_number,
    domination_number,
)

OPERATIONS = ("join", "corona", "ncorona", "hajos", "regular")

#: Branches whose violation means an implementation bug rather than a finding.
PROVEN_BRANCHES = frozenset({"ncorona.range", "hajos.upper"})

VERDICTS = ("match", "bound_holds", "bound_tight", "discrepancy", "not_applicable", "skipped")

DEFAULT_INSTANCE_BUDGET_S = 10.0


@dataclass(frozen=True, slots=True)
class ScanConfig:
    """Scope of a family scan.

    ``families`` is a subset of {"enumerated", "generators"}: enumerated means
    every labeled connected graph with at most ``max_n`` vertices (max_n <= 5),
    generators means the named families with ``min_size <= n <= max_size``.
    """

    op: str
    families: tuple[str, ...] = ("enumerated",)
    max_n: int = 4
    min_size: int = 2
    max_size: int = 5
    budget_per_instance: float = DEFAULT_INSTANCE_BUDGET_S

    def __post_init__(self) -> None:
        if self.op not in OPERATIONS:
            raise ValueError(f"unknown operation {self.op!r}")
        bad = set(self.families) - {"enumerated", "generators"}
        if bad:
            raise ValueError(f"unknown families: {sorted(bad)}")
        if "enumerated" in self.families and self.max_n > 5:
            raise ValueError("exhaustive pair scans support max_n <= 5")

    def to_dict(self) -> dict:
        return {
            "op": self.op,
            "families": list(self.families),
            "max_n": self.max_n,
            "min_size": self.min_size,
            "max_size": self.max_size,
            "budget_per_instance": self.budget_per_instance,
        }


@dataclass(slots=True)
class ReportEntry:
    instance_id: str
    operation: str
    factors: tuple[str, ...]
    branch: str
    formula: EvalResult
    verdict: str
    oracle_value: int | None = None
    oracle_witness: tuple[int, ...] | None = None
    oracle_gamma: int | None = None
    note: str = ""
    runtime_ms: float = 0.0

    def to_dict(self, include_runtime: bool = True) -> dict:
        d: dict = {
            "instance_id": self.instance_id,
            "operation": self.operation,
            "factors": list(self.factors),
            "branch": self.branch,
            "formula": self.formula.to_dict(),
            "verdict": self.verdict,
        }
        if self.oracle_value is not None:
            d["oracle"] = {"value": self.oracle_value, "witness": list(self.oracle_witness or ())}
        if self.oracle_gamma is not None:
            d["oracle_gamma"] = self.oracle_gamma
        if self.note:
            d["note"] = self.note
        if include_runtime:
            d["runtime_ms"] = self.runtime_ms
        return d


@dataclass(slots=True)
class Report:
    config: dict
    entries: list[ReportEntry] = field(default_factory=list)
    extra_summary: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        counts = {v: 0 for v in VERDICTS}
        proven = 0
        for e in self.entries:
            counts[e.verdict] += 1
            if e.verdict == "discrepancy" and e.branch in PROVEN_BRANCHES:
                proven += 1
        out = {"instances": len(self.entries), **counts, "proven_violations": proven}
        out.update(self.extra_summary)
        return out

    def to_dict(self, include_runtime: bool = True) -> dict:
        return {
            "config": self.config,
            "summary": self.summary,
            "entries": [e.to_dict(include_runtime) for e in self.entries],
        }

    def canonical_json(self) -> str:
        """Byte-stable serialization: no runtimes, sorted keys, compact separators."""
        return json.dumps(self.to_dict(include_runtime=False), sort_keys=True, separators=(",", ":"))

    def canonical_sha256(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()

    def to_json(self) -> str:
        doc = self.to_dict(include_runtime=True)
        doc["canonical_sha256"] = self.canonical_sha256()
        return json.dumps(doc, sort_keys=True, indent=2)

    def write_json(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())
            fh.write("\n")

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            [
                "instance_id", "operation", "factors", "branch", "formula_kind",
                "formula_value", "formula_lo", "formula_hi", "oracle_value",
                "oracle_gamma", "witness", "verdict", "note", "runtime_ms",
            ]
        )
        for e in self.entries:
            writer.writerow(
                [
                    e.instance_id, e.operation, " ".join(e.factors), e.branch,
                    e.formula.kind,
                    "" if e.formula.value is None else e.formula.value,
                    "" if e.formula.lo is None else e.formula.lo,
                    "" if e.formula.hi is None else e.formula.hi,
                    "" if e.oracle_value is None else e.oracle_value,
                    "" if e.oracle_gamma is None else e.oracle_gamma,
                    " ".join(map(str, e.oracle_witness or ())),
                    e.verdict, e.note, e.runtime_ms,
                ]
            )
        return buf.getvalue()

    def write_csv(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_csv())


# ---------------------------------------------------------------------------
# Single-instance checking
# ---------------------------------------------------------------------------


def _classify(formula: EvalResult, oracle: int) -> tuple[str, str]:
    """Map a formula result and an oracle value to (verdict, note)."""
    if formula.kind == EXACT:
        if oracle == formula.value:
            return "match", ""
        return "discrepancy", f"claimed exactly {formula.value}, oracle found {oracle}"
    if formula.kind == UPPER_BOUND:
        assert formula.value is not None
        if oracle > formula.value:
            return "discrepancy", f"claimed <= {formula.value}, oracle found {oracle}"
        return ("bound_tight", "upper") if oracle == formula.value else ("bound_holds", "")
    if formula.kind == LOWER_BOUND:
        assert formula.value is not None
        if oracle < formula.value:
            return "discrepancy", f"claimed >= {formula.value}, oracle found {oracle}"
        return ("bound_tight", "lower") if oracle == formula.value else ("bound_holds", "")
    if formula.kind == RANGE:
        assert formula.lo is not None and formula.hi is not None
        if not formula.lo <= oracle <= formula.hi:
            return "discrepancy", f"claimed in [{formula.lo},{formula.hi}], oracle found {oracle}"
        if oracle == formula.lo:
            return "bound_tight", "lower"
        if oracle == formula.hi:
            return "bound_tight", "upper"
        return "bound_holds", ""
    raise AssertionError(f"unexpected formula kind {formula.kind}")


def instance_id_for(op: str, g: Graph, h: Graph | None, spec: HajosSpec | None = None) -> str:
    parts = [op, to_graph6(g)]
    if h is not None:
        parts.append(to_graph6(h))
    if spec is not None:
        parts.append(f"e1={spec.e1[0]},{spec.e1[1]}")
        parts.append(f"e2={spec.e2[0]},{spec.e2[1]}")
    return " ".join(parts)


def _coe_cached(g: Graph, cache: dict | None, time_limit: float | None = None) -> int:
    if cache is None:
        return coeven_domination_number(g, time_limit=time_limit).value
    key = to_graph6(g)
    if key not in cache:
        cache[key] = coeven_domination_number(g, time_limit=time_limit).value
    return cache[key]


def check_instance(
    op: str,
    g: Graph,
    h: Graph | None = None,
    spec: HajosSpec | None = None,
    budget_s: float = DEFAULT_INSTANCE_BUDGET_S,
    _factor_cache: dict | None = None,
) -> ReportEntry:
    """Construct one product, evaluate the matching rule and the oracle, classify."""
    if op not in OPERATIONS:
        raise ValueError(f"unknown operation {op!r}")
    t0 = time.perf_counter()
    iid = instance_id_for(op, g, h, spec)
    factors = (to_graph6(g),) if h is None else (to_graph6(g), to_graph6(h))

    def finish(entry: ReportEntry) -> ReportEntry:
        entry.runtime_ms = round((time.perf_counter() - t0) * 1000, 3)
        return entry

    if op == "regular":
        formula = coeven_regular(g)
        product = g
    elif op == "join":
        assert h is not None
        formula = coeven_join(g, h)
        product = join(g, h)[0]
    elif op == "corona":
        assert h is not None
        formula = coeven_corona(g, h)
        product = corona(g, h)[0]
    elif op == "ncorona":
        assert h is not None
        formula = coeven_ncorona_bounds(g, h)
        product = neighbourhood_corona(g, h)[0]
    else:  # hajos
        assert h is not None and spec is not None
        if not (is_connected(g) and is_connected(h)):
            formula = EvalResult.not_applicable("both factors must be connected", "hajos")
        else:
            g1 = _coe_cached(g, _factor_cache)
            g2 = _coe_cached(h, _factor_cache)
            formula = coeven_hajos_upper(g1, g2)
        product = hajos_sum(g, h, spec)[0]

    if formula.kind == NOT_APPLICABLE:
        return finish(
            ReportEntry(iid, op, factors, formula.branch, formula, "not_applicable", note=formula.note)
        )

    try:
        coe = coeven_domination_number(product, time_limit=budget_s)
        gamma = domination_number(product, time_limit=budget_s).value
    except SearchBudgetExceeded:
        return finish(
            ReportEntry(
                iid, op, factors, formula.branch, formula, "skipped",
                note=f"oracle exceeded {budget_s:g}s budget",
            )
        )
    verdict, note = _classify(formula, coe.value)
    return finish(
        ReportEntry(
            iid, op, factors, formula.branch, formula, verdict,
            oracle_value=coe.value,
            oracle_witness=coe.witness.members,
            oracle_gamma=gamma,
            note=note,
        )
    )


# ---------------------------------------------------------------------------
# Instance pools
# ---------------------------------------------------------------------------


def enumerated_pool(max_n: int) -> list[Graph]:
    """Every labeled connected graph on 1..max_n vertices, enumeration order."""
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(enumerate_connected(n))
    return out


def generator_pool(min_size: int = 2, max_size: int = 5) -> list[Graph]:
    """Named-family graphs with min_size..max_size vertices, deduplicated by
    adjacency: paths, cycles, stars, complete, complete bipartite."""
    pool: list[Graph] = []
    seen: set[str] = set()

    def push(g: Graph) -> None:
        key = to_graph6(g)
        if key not in seen:
            seen.add(key)
            pool.append(g)

    for s in range(min_size, max_size + 1):
        push(path_graph(s))
        if s >= 3:
            push(cycle_graph(s))
        if s >= 2:
            push(star_graph(s))
        push(complete_graph(s))
        for a in range(1, s):
            push(complete_bipartite_graph(a, s - a))
    return pool


def _pool_for(config: ScanConfig) -> list[Graph]:
    pool: list[Graph] = []
    seen: set[str] = set()
    for fam in config.families:
        graphs = (
            enumerated_pool(config.max_n)
            if fam == "enumerated"
            else generator_pool(config.min_size, config.max_size)
        )
        for g in graphs:
            key = to_graph6(g)
            if key not in seen:
                seen.add(key)
                pool.append(g)
    return pool


def oriented_edges(g: Graph) -> list[tuple[int, int]]:
    out = []
    for u, v in g.edges():
        out.append((u, v))
        out.append((v, u))
    return out


# ---------------------------------------------------------------------------
# Scans
# ---------------------------------------------------------------------------


def run_family_scan(config: ScanConfig) -> Report:
    """Check every instance in scope; the report is sorted by instance id."""
    pool = _pool_for(config)
    cache: dict = {}
    entries: list[ReportEntry] = []
    budget = config.budget_per_instance
    if config.op == "regular":
        for g in pool:
            entries.append(check_instance("regular", g, budget_s=budget))
    elif config.op in ("join", "corona", "ncorona"):
        for g, h in itertools.product(pool, repeat=2):
            entries.append(check_instance(config.op, g, h, budget_s=budget))
    else:  # hajos
        seen_ids: set[str] = set()
        for g, h in itertools.product(pool, repeat=2):
            for e1 in oriented_edges(g):
                for e2 in oriented_edges(h):
                    spec = HajosSpec(e1, e2)
                    iid = instance_id_for("hajos", g, h, spec)
                    if iid in seen_ids:
                        continue
                    seen_ids.add(iid)
                    entries.append(
                        check_instance("hajos", g, h, spec, budget_s=budget, _factor_cache=cache)
                    )
    entries.sort(key=lambda e: e.instance_id)
    return Report(config.to_dict(), entries)


def conjecture_scan(
    max_n: int = 4,
    budget_s: float = 600.0,
    families: tuple[str, ...] = ("enumerated",),
    max_size: int = 5,
) -> Report:
    """Scan Hajos sums for violations of the conjectured lower bound.

    Every ordered factor pair and every oriented edge pair is tried.  Entries
    record only counterexamples (oracle below the conjectured bound); the
    summary always reports the minimum observed slack and where it occurred.
    On budget exhaustion the report is flagged incomplete.
    """
    if "enumerated" in families and max_n > 5:
        raise ValueError("exhaustive conjecture scans support max_n <= 5")
    config = {
        "scan": "conjecture",
        "families": list(families),
        "max_n": max_n,
        "max_size": max_size,
        "budget_s": budget_s,
    }
    pool: list[Graph] = []
    seen: set[str] = set()
    for fam in families:
        graphs = enumerated_pool(max_n) if fam == "enumerated" else generator_pool(2, max_size)
        for g in graphs:
            key = to_graph6(g)
            if key not in seen and g.m > 0:
                seen.add(key)
                pool.append(g)

    deadline = time.monotonic() + budget_s
    cache: dict = {}
    entries: list[ReportEntry] = []
    checked = 0
    min_slack: int | None = None
    min_slack_instance = ""
    incomplete = False
    stopped_at = ""

    def out_of_time() -> bool:
        return time.monotonic() > deadline

    for g, h in itertools.product(pool, repeat=2):
        if incomplete:
            break
        for e1 in oriented_edges(g):
            if incomplete:
                break
            for e2 in oriented_edges(h):
                spec = HajosSpec(e1, e2)
                iid = instance_id_for("hajos", g, h, spec)
                if out_of_time():
                    incomplete = True
                    stopped_at = iid
                    break
                try:
                    remaining = max(0.05, deadline - time.monotonic())
                    g1 = _coe_cached(g, cache, time_limit=remaining)
                    g2 = _coe_cached(h, cache, time_limit=remaining)
                    product = hajos_sum(g, h, spec)[0]
                    g3 = coeven_domination_number(product, time_limit=remaining).value
                except SearchBudgetExceeded:
                    incomplete = True
                    stopped_at = iid
                    break
                checked += 1
                slack = g3 - (g1 + g2 - 2)
                if min_slack is None or slack < min_slack:
                    min_slack = slack
                    min_slack_instance = iid
                if slack < 0:
                    formula = EvalResult.lower(g1 + g2 - 2, "hajos.conj_lower", note="conjectural")
                    entries.append(
                        ReportEntry(
                            iid, "hajos", (to_graph6(g), to_graph6(h)),
                            "hajos.conj_lower", formula, "discrepancy",
                            oracle_value=g3,
                            note=f"counterexample: gamma1={g1} gamma2={g2} gamma3={g3} slack={slack}",
                        )
                    )

    entries.sort(key=lambda e: e.instance_id)
    extra = {
        "checked": checked,
        "counterexamples": len(entries),
        "min_slack": min_slack,
        "min_slack_instance": min_slack_instance,
        "incomplete": incomplete,
    }
    if stopped_at:
        extra["stopped_at"] = stopped_at
    return Report(config, entries, extra_summary=extra)


# ---------------------------------------------------------------------------
# Named fixtures
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Fixture:
    """A named instance with a recipe built only from generators and operations.

    ``expected_value`` pins the co-even number of the product when known;
    ``expected_shape`` pins (vertex count, edge count).  ``provenance`` records
    where the expectation comes from: "stated-value" for published numbers,
    "derived-value" for values computed here, "reconstructed-drawing" for
    recipes inferred from a drawn example (verified, never assumed).
    """

    fixture_id: str
    description: str
    operation: str
    left: Graph
    right: Graph
    spec: HajosSpec | None = None
    expected_value: int | None = None
    expected_shape: tuple[int, int] | None = None
    expected_factor_values: tuple[int, int] | None = None
    provenance: str = "derived-value"

    def product(self) -> Graph:
        if self.operation == "join":
            return join(self.left, self.right)[0]
        if self.operation == "corona":
            return corona(self.left, self.right)[0]
        if self.operation == "ncorona":
            return neighbourhood_corona(self.left, self.right)[0]
        assert self.spec is not None
        return hajos_sum(self.left, self.right, self.spec)[0]


def _c6_plus_pendant() -> Graph:
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 6)]
    return new_graph(7, edges, name="C6+pendant")


def named_fixtures() -> list[Fixture]:
    """The bundled sharpness and shape fixtures F1..F6."""
    return [
        Fixture(
            "F1", "neighbourhood corona of P4 and P3; value must land in the proven range",
            "ncorona", path_graph(4), path_graph(3),
            expected_shape=(16, 29), provenance="derived-value",
        ),
        Fixture(
            "F2", "neighbourhood corona of P2 and K4; upper bound attained",
            "ncorona", path_graph(2), complete_graph(4),
            expected_value=2, provenance="stated-value",
        ),
        Fixture(
            "F3", "neighbourhood corona of C3 and K4; lower bound attained",
            "ncorona", cycle_graph(3), complete_graph(4),
            expected_value=12, provenance="stated-value",
        ),
        Fixture(
            "F4", "Hajos sum of K4 and C4; shape check",
            "hajos", complete_graph(4), cycle_graph(4), HajosSpec((0, 1), (0, 1)),
            expected_shape=(7, 9), provenance="derived-value",
        ),
        Fixture(
            "F5",
            "Hajos sharpness pair: C6 with a pendant at the identified endpoint "
            "versus P7 cut between its 2nd and 3rd vertices; adjacency "
            "reconstructed from a drawn example, equality verified rather than assumed",
            "hajos", _c6_plus_pendant(), path_graph(7), HajosSpec((0, 1), (1, 2)),
            expected_value=7, expected_factor_values=(3, 3),
            provenance="reconstructed-drawing",
        ),
        Fixture(
            "F6", "Hajos sum of two K4s; conjectured lower bound attained",
            "hajos", complete_graph(4), complete_graph(4), HajosSpec((0, 1), (0, 1)),
            expected_value=6, provenance="stated-value",
        ),
    ]
