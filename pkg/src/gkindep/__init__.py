"""Generalized k-independent sets: bounds, exact solvers, and constructions.

A set S of vertices is valid for parameter k when the induced subgraph G[S]
contains no tree on k vertices, i.e. every component of G[S] has at most
k-1 vertices (k=2 gives independent sets, k=3 dissociation sets).  This
package computes the sharp lower bound ceil((k-1)(n - omega)/k) on the
largest such set (omega being the cycle-space dimension), recognizes and
generates the graphs attaining it, refines the bound when the equality
conditions fail, constructs certified sets in linear time, and solves small
instances exactly.
"""
from .bounds import (
    BoundReport,
    GammaComponentSlack,
    base_bound,
    cycle_alpha,
    path_alpha,
    pendant_slack,
    refined_bound,
)
from .construct import (
    GkSet,
    construct_set,
    equality_refinement,
    phase_a,
    phase_b,
    verify_set,
)
from .cycles import (
    CycleStructure,
    DfsForest,
    NotVertexDisjoint,
    contracted_graph,
    cycle_space_dimension,
    cycle_structure,
    dfs_forest,
    gamma_graph,
)
from .errors import (
    BudgetExhausted,
    CyclicInputError,
    DuplicateEdgeError,
    GkError,
    InternalGuaranteeViolation,
    NotATreeError,
    NotExtremalError,
    ParameterError,
    ParseError,
    RangeError,
    RefinementFailure,
    SelfLoopError,
    TooLargeError,
)
from .exact import ExactResult, brute_force_alpha, exact_alpha, forest_tau
from .extremal import (
    BlockDecomposition,
    ExtremalReport,
    NotMember,
    check_extremal,
    generate_extremal,
    generate_extremal_plan,
    generate_r_tree,
    r_membership,
)
from .families import (
    complete_graph,
    cycle_graph,
    figure1_graph,
    path_graph,
    star_graph,
)
from .graph import (
    ComponentPartition,
    Graph,
    build_graph,
    components,
    delete_vertices,
    induced_subgraph,
    parse_graph,
    write_graph,
)

__all__ = [
    "BlockDecomposition",
    "BoundReport",
    "BudgetExhausted",
    "ComponentPartition",
    "CycleStructure",
    "CyclicInputError",
    "DfsForest",
    "DuplicateEdgeError",
    "ExactResult",
    "ExtremalReport",
    "GammaComponentSlack",
    "GkError",
    "GkSet",
    "Graph",
    "InternalGuaranteeViolation",
    "NotATreeError",
    "NotExtremalError",
    "NotMember",
    "NotVertexDisjoint",
    "ParameterError",
    "ParseError",
    "RangeError",
    "RefinementFailure",
    "SelfLoopError",
    "TooLargeError",
    "base_bound",
    "brute_force_alpha",
    "build_graph",
    "check_extremal",
    "complete_graph",
    "components",
    "construct_set",
    "contracted_graph",
    "cycle_alpha",
    "cycle_graph",
    "cycle_space_dimension",
    "cycle_structure",
    "delete_vertices",
    "dfs_forest",
    "equality_refinement",
    "exact_alpha",
    "figure1_graph",
    "forest_tau",
    "gamma_graph",
    "generate_extremal",
    "generate_extremal_plan",
    "generate_r_tree",
    "induced_subgraph",
    "parse_graph",
    "path_alpha",
    "path_graph",
    "pendant_slack",
    "phase_a",
    "phase_b",
    "r_membership",
    "refined_bound",
    "star_graph",
    "verify_set",
    "write_graph",
]
