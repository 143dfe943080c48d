"""Co-even domination numbers under binary graph operations.

A co-even dominating set is a dominating set whose complement contains only
even-degree vertices.  This package builds the four products (join, corona,
neighbourhood corona, Hajos sum), computes exact plain and co-even domination
numbers with witnesses, evaluates the known closed forms and bounds, and
machine-checks them against the exact solver.
"""

from .formats import Graph6Error, parse_edgelist, parse_graph6, to_dot, to_edgelist, to_graph6
from .formulas import (
    EvalResult,
    coeven_corona,
    coeven_hajos_conjectured_lower,
    coeven_hajos_upper,
    coeven_join,
    coeven_ncorona_bounds,
    coeven_regular,
)
from .graphs import (
    Graph,
    ParityProfile,
    VertexSet,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_connected,
    generate,
    is_connected,
    new_graph,
    parity_profile,
    path_graph,
    star_graph,
    wheel_graph,
)
from .ops import HajosSpec, IndexMap, VertexOrigin, corona, hajos_sum, join, neighbourhood_corona
from .solver import (
    DominationResult,
    SearchBudgetExceeded,
    coeven_domination_number,
    domination_number,
    forced_set,
    is_coeven_dominating,
    is_dominating,
)
from .verify import (
    Fixture,
    Report,
    ReportEntry,
    ScanConfig,
    check_instance,
    conjecture_scan,
    named_fixtures,
    run_family_scan,
)

__version__ = "0.1.0"

__all__ = [
    "Graph", "VertexSet", "ParityProfile", "new_graph", "parity_profile",
    "is_connected", "generate", "enumerate_connected",
    "path_graph", "cycle_graph", "complete_graph", "complete_bipartite_graph",
    "star_graph", "wheel_graph", "empty_graph",
    "Graph6Error", "parse_graph6", "to_graph6", "parse_edgelist", "to_edgelist", "to_dot",
    "HajosSpec", "IndexMap", "VertexOrigin", "join", "corona", "neighbourhood_corona", "hajos_sum",
    "DominationResult", "SearchBudgetExceeded", "forced_set",
    "is_dominating", "is_coeven_dominating", "domination_number", "coeven_domination_number",
    "EvalResult", "coeven_regular", "coeven_join", "coeven_corona",
    "coeven_ncorona_bounds", "coeven_hajos_upper", "coeven_hajos_conjectured_lower",
    "ScanConfig", "ReportEntry", "Report", "Fixture",
    "check_instance", "run_family_scan", "conjecture_scan", "named_fixtures",
    "__version__",
]
