"""Centrality-weighted opinion dynamics and spectral network partition."""

from ._opinet import (
    CentralityKind,
    CentralityVector,
    Error,
    Graph,
    InfluenceSystem,
    MarkovClassification,
    MarkovTrajectory,
    MembershipRanking,
    OpinionTrajectory,
    PartitionResult,
    PartitionTree,
    ProbabilityState,
    SpectralDecomposition,
    StopReason,
    agreement_component,
    bipartition,
    build_influence,
    builtin_dataset,
    complete_graph,
    custom_centrality,
    degree_centrality,
    degree_vector,
    disagreement_direction,
    disagreement_state,
    diversity_energy,
    eigendecompose,
    eigenvalue_groups,
    eigenvector_centrality,
    entropy_diversity,
    fiedler_baseline,
    graph_period,
    induced_subgraph,
    inverse_simpson_diversity,
    is_connected,
    iterative_partition,
    kmeans_partition,
    laplacian_of_graph,
    markov_classify,
    markov_trajectory,
    membership_strengths,
    parse_edge_list,
    projected_mode,
    solve_opinions,
    tree_leaves,
    uniform_centrality,
)

__all__ = [
    "CentralityKind",
    "CentralityVector",
    "Error",
    "Graph",
    "InfluenceSystem",
    "MarkovClassification",
    "MarkovTrajectory",
    "MembershipRanking",
    "OpinionTrajectory",
    "PartitionResult",
    "PartitionTree",
    "ProbabilityState",
    "SpectralDecomposition",
    "StopReason",
    "agreement_component",
    "bipartition",
    "build_influence",
    "builtin_dataset",
    "complete_graph",
    "custom_centrality",
    "degree_centrality",
    "degree_vector",
    "disagreement_direction",
    "disagreement_state",
    "diversity_energy",
    "eigendecompose",
    "eigenvalue_groups",
    "eigenvector_centrality",
    "entropy_diversity",
    "fiedler_baseline",
    "graph_period",
    "induced_subgraph",
    "inverse_simpson_diversity",
    "is_connected",
    "iterative_partition",
    "kmeans_partition",
    "laplacian_of_graph",
    "markov_classify",
    "markov_trajectory",
    "membership_strengths",
    "parse_edge_list",
    "projected_mode",
    "solve_opinions",
    "tree_leaves",
    "uniform_centrality",
]
