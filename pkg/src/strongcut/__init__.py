"""Restricted edge-connectivity of strong product graphs.

Exact solvers (unit-capacity max-flow and exhaustive bipartition enumeration),
closed forms for products with paths, cycles and complete graphs, and a sweep
harness checking that they agree.
"""

__version__ = "0.1.0"

from .graph import (
    ENUMERATION_CAP,
    Bipartition,
    CapacityError,
    DisconnectedGraphError,
    Graph,
    GraphError,
    ParseError,
    cut_of,
    format_edge_list,
    has_isolated_vertex,
    induced_subgraph,
    is_connected,
    is_star,
    min_degree,
    min_edge_degree,
    parse_edge_list,
)
from .products import (
    ProductGraph,
    cartesian_product,
    direct_product,
    k2_odot,
    make_complete,
    make_cycle,
    make_path,
    strong_product,
)
from .invariants import (
    InvariantReport,
    RestrictedCutResult,
    all_minimum_restricted_bipartitions,
    classify,
    edge_connectivity,
    restricted_edge_connectivity_flow,
    restricted_edge_connectivity_oracle,
)
from .formulas import (
    FactorStats,
    FormulaBreakdown,
    corollary_predicate,
    lambda_prime_formula,
    lambda_strong_formula,
    xi_strong_formula,
)
from .verify import check_theorem, generate_corpus, sweep
