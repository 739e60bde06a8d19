"""Decide and construct closed/open trails of a graph that cover a given subgraph."""

from .algorithm import (
    Completion,
    InfeasibleError,
    MatchingPlan,
    OddPartition,
    PreconditionError,
    Verdict,
    build_partition,
    completed_subgraph,
    decide_closed,
    decide_open,
    euler_trail,
    even_completion,
    odd_vertices,
    plan_matching,
    s_eulerian_trail,
    verify_trail,
)
from .graphcore import (
    Graph,
    GraphError,
    Subgraph,
    Trail,
    components,
    degree,
    is_connected,
    parse_graph,
    parse_subgraph,
    parse_trail,
    serialize_graph,
    serialize_subgraph,
    serialize_trail,
    subgraph_from,
)
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    ham_cycle_bruteforce,
    ham_path_bruteforce,
    oracle_s_eulerian,
    spanning_semi_eulerian_bruteforce,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Completion",
    "Graph",
    "GraphError",
    "InfeasibleError",
    "MatchingPlan",
    "OddPartition",
    "OracleBudget",
    "PreconditionError",
    "Subgraph",
    "Trail",
    "Verdict",
    "build_partition",
    "completed_subgraph",
    "components",
    "decide_closed",
    "decide_open",
    "degree",
    "euler_trail",
    "even_completion",
    "ham_cycle_bruteforce",
    "ham_path_bruteforce",
    "is_connected",
    "odd_vertices",
    "oracle_s_eulerian",
    "parse_graph",
    "parse_subgraph",
    "parse_trail",
    "plan_matching",
    "s_eulerian_trail",
    "serialize_graph",
    "serialize_subgraph",
    "serialize_trail",
    "spanning_semi_eulerian_bruteforce",
    "subgraph_from",
    "verify_trail",
]
