"""Splitting-off based approximation for 2-edge-connected spanning multisubgraphs.

The main entry points are :func:`solve_two_thirds` (4-regular 4-edge-connected
multigraphs, any rational costs), :func:`solve_half_integral` (half-integral
subtour LP points, cost at most 4/3 of the LP value) and
:func:`solve_cubic_seven_eighths` (cubic 3-edge-connected graphs, cost at most
7/8 of the graph).
"""

from .certificate import SubgraphCertificate
from .connectivity import (
    global_min_cut,
    global_min_cut_value,
    is_k_edge_connected_excluding,
    is_two_edge_connected_spanning,
    local_edge_connectivity,
    max_flow_value,
)
from .convex_oracle import (
    ConvexCombination,
    brute_admissible,
    brute_optimal_2ec_subgraph,
    brute_optimal_2ecm,
    check_convex_combination,
    convex_decomposition,
)
from .cubic78 import christofides_2ecm, find_good_two_factor, solve_cubic_seven_eighths
from .errors import DomainError, InvariantViolation, ParseError, ResourceLimitError, SplitoffError
from .half_integral import (
    HalfIntegralSolution,
    metric_complete_instance,
    solve_half_integral,
    support_multigraph,
    validate_solution,
)
from .multigraph import (
    EdgeRecord,
    Input,
    MultiGraph,
    Split,
    contract_edge_set,
    degree,
    metric_closure,
    total_cost,
)
from .splitting import (
    Figure1Case,
    SplitStep,
    admissible_set,
    complete_split_at,
    figure1_case,
    is_admissible_fast,
    split_off_pair,
)
from .two_thirds import choose_labels, lift_step, solve_two_thirds

__version__ = "0.1.0"


__all__ = [
    "admissible_set",
    "brute_admissible",
    "brute_optimal_2ec_subgraph",
    "brute_optimal_2ecm",
    "check_convex_combination",
    "choose_labels",
    "christofides_2ecm",
    "complete_split_at",
    "contract_edge_set",
    "convex_decomposition",
    "ConvexCombination",
    "degree",
    "DomainError",
    "EdgeRecord",
    "figure1_case",
    "Figure1Case",
    "find_good_two_factor",
    "global_min_cut",
    "global_min_cut_value",
    "HalfIntegralSolution",
    "Input",
    "InvariantViolation",
    "is_admissible_fast",
    "is_k_edge_connected_excluding",
    "is_two_edge_connected_spanning",
    "lift_step",
    "local_edge_connectivity",
    "max_flow_value",
    "metric_closure",
    "metric_complete_instance",
    "MultiGraph",
    "ParseError",
    "ResourceLimitError",
    "solve_cubic_seven_eighths",
    "solve_half_integral",
    "solve_two_thirds",
    "Split",
    "split_off_pair",
    "SplitoffError",
    "SplitStep",
    "SubgraphCertificate",
    "support_multigraph",
    "total_cost",
    "validate_solution",
]
