"""Secure connected and secure total domination: exact solvers, certificate
verifiers, graph-class algorithms, family formulas, and hardness-reduction
builders, cross-validated against brute force at desk scale."""

from .exact import (
    SolveReport,
    canonical_form,
    enumerate_connected_graphs,
    random_block_graph,
    random_graph,
    random_threshold_graph,
    random_tree,
    solve,
)
from .families import FAMILY_KINDS, FamilySpec, formula_value, formula_witness, generate
from .fast import (
    BlockDecomposition,
    SplitPartition,
    SplitRejection,
    ThresholdOrdering,
    ThresholdRejection,
    block_decompose,
    gamma_sc_block,
    gamma_sc_threshold,
    is_bipartite,
    is_block_graph,
    random_split_graph,
    recognize_split,
    recognize_threshold,
)
from .graph import (
    ComponentLabeling,
    DomainError,
    Graph,
    ParseError,
    from_edge_list,
    to_edge_list,
)
from .reductions import (
    REDUCTION_KINDS,
    EquivalenceReport,
    ReductionArtifact,
    check_equivalence,
    reduce_bipartite,
    reduce_split,
    reduce_universal,
)
from .verify import (
    VARIANTS,
    DefenderMap,
    epn,
    is_connected_dominating,
    is_dominating,
    is_scds,
    is_scds_characterization,
    is_scds_definition,
    is_secure_dominating,
    is_stds,
    is_total_dominating,
)

__all__ = [
    "BlockDecomposition",
    "ComponentLabeling",
    "DefenderMap",
    "DomainError",
    "EquivalenceReport",
    "FAMILY_KINDS",
    "FamilySpec",
    "Graph",
    "ParseError",
    "REDUCTION_KINDS",
    "ReductionArtifact",
    "SolveReport",
    "SplitPartition",
    "SplitRejection",
    "ThresholdOrdering",
    "ThresholdRejection",
    "VARIANTS",
    "block_decompose",
    "canonical_form",
    "check_equivalence",
    "enumerate_connected_graphs",
    "epn",
    "formula_value",
    "formula_witness",
    "from_edge_list",
    "gamma_sc_block",
    "gamma_sc_threshold",
    "generate",
    "is_bipartite",
    "is_block_graph",
    "is_connected_dominating",
    "is_dominating",
    "is_scds",
    "is_scds_characterization",
    "is_scds_definition",
    "is_secure_dominating",
    "is_stds",
    "is_total_dominating",
    "random_block_graph",
    "random_graph",
    "random_split_graph",
    "random_threshold_graph",
    "random_tree",
    "recognize_split",
    "recognize_threshold",
    "reduce_bipartite",
    "reduce_split",
    "reduce_universal",
    "solve",
    "to_edge_list",
]
