"""Exact domination and independent domination numbers, with the bipartite
independent-dominating-set construction and the graph families around it."""

from domkit.bounds import (
    RatioReport,
    conjecture_bound,
    furuya_exceeds_half_delta,
    rad_volkmann_bound,
    ratio_report,
)
from domkit.errors import (
    DomkitError,
    GraphError,
    NotBipartiteError,
    NotDominatingError,
    OracleCapExceeded,
    ParseError,
)
from domkit.families import (
    FamilyParams,
    complete_bipartite,
    cycle,
    double_star,
    family_closed_forms,
    odd_cycle_corona,
    random_bipartite,
    random_graph,
)
from domkit.graph import (
    Bipartition,
    Graph,
    OddCycle,
    bipartition,
    build_graph,
    is_dominating,
    is_independent,
    max_degree,
    open_neighborhood,
    read_edge_list,
    write_edge_list,
)
from domkit.solvers import (
    SolveResult,
    gamma_bnb,
    gamma_oracle,
    i_bnb,
    i_oracle,
)
from domkit.transform import (
    Theorem3Report,
    TransformTrace,
    independent_dominating_from,
    proof_violations,
    verify_theorem3,
)

__all__ = [
    "Bipartition",
    "DomkitError",
    "FamilyParams",
    "Graph",
    "GraphError",
    "NotBipartiteError",
    "NotDominatingError",
    "OddCycle",
    "OracleCapExceeded",
    "ParseError",
    "RatioReport",
    "SolveResult",
    "Theorem3Report",
    "TransformTrace",
    "bipartition",
    "build_graph",
    "complete_bipartite",
    "conjecture_bound",
    "cycle",
    "double_star",
    "family_closed_forms",
    "furuya_exceeds_half_delta",
    "gamma_bnb",
    "gamma_oracle",
    "i_bnb",
    "i_oracle",
    "independent_dominating_from",
    "is_dominating",
    "is_independent",
    "max_degree",
    "odd_cycle_corona",
    "open_neighborhood",
    "proof_violations",
    "rad_volkmann_bound",
    "random_bipartite",
    "random_graph",
    "ratio_report",
    "read_edge_list",
    "verify_theorem3",
    "write_edge_list",
]
