#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "opinet/dynamics.hpp"
#include "opinet/spectral.hpp"

namespace opinet {

/// Sign-based bipartition: cluster1 = {i : s(i) > 0}, cluster2 = {i : s(i) <= 0}.
/// s holds the disagreement values in stationary-weighted coordinates
/// (entrywise sqrt(n) v_1 times the eigenvector formulas): the signs equal
/// those of the raw right-eigenvector expressions, sum_i s(i) = 0 holds
/// exactly, and |s| ranks membership strength with hubs on top.
struct PartitionResult {
    Eigen::VectorXd s;
    NodeSet cluster1;
    NodeSet cluster2;
    Eigen::VectorXd strengths; // |s(i)| per node
    int multiplicity_used = 1;
    std::optional<Eigen::VectorXd> used_initial_state;
};

/// Disagreement-sign bipartition.
/// Multiplicity 1: s = u_2 (x0 ignored). Multiplicity m2 > 1: s is the
/// lambda_2-group projection sum_l u_l (v_l^T x0); x0 is then required
/// (errc::initial_state_required) and must have a nonzero projection
/// (errc::indecisive_partition).
PartitionResult bipartition(const SpectralDecomposition& dec,
                            const std::optional<Eigen::VectorXd>& x0 = {});

/// The lambda_2-group projection sum_l u_l (v_l^T x0), for any multiplicity.
/// This is the basis-independent spectral projector of the lambda_2 group
/// applied to x0.
Eigen::VectorXd disagreement_direction(const SpectralDecomposition& dec,
                                       const Eigen::VectorXd& x0);

/// Same sign rule applied to the Fiedler eigenvector of L = diag(A*1) - A.
PartitionResult fiedler_baseline(const Graph& g, double eps_mult = 1e-8);

enum class StopReason { multiplicity_gt_1, too_small, max_depth, disconnected_split };

const char* stop_reason_name(StopReason reason) noexcept;

/// Recursive bipartition tree. All node sets are in root-graph indices;
/// split->s aligns element-wise with `nodes`. Leaves carry a stop reason;
/// a disconnected subgraph records disconnected_split and its connected
/// components continue as children.
struct PartitionTree {
    NodeSet nodes;
    std::optional<PartitionResult> split;
    std::vector<PartitionTree> children;
    std::optional<StopReason> stop;
    int depth = 0;
};

struct IterativePartitionOptions {
    int min_size = 3;   // subgraphs with fewer than min_size nodes stop
    int max_depth = 16;
    double eps_mult = 1e-8;
};

/// Iterative bipartition: recursively split induced subgraphs until the
/// lambda_2 multiplicity exceeds 1 (the paper's stop rule), the subgraph is
/// too small, or the depth limit is hit. The number of clusters emerges from
/// the recursion. Centrality is recomputed per subgraph (custom not allowed).
PartitionTree iterative_partition(const Graph& g, CentralityKind kind,
                                  const IterativePartitionOptions& options = {});

/// Node sets of all leaves, ordered by smallest node index.
std::vector<NodeSet> tree_leaves(const PartitionTree& tree);

/// 1-dimensional K-means over the disagreement values s(i) with k-means++
/// seeding from `seed` and Lloyd iterations to an assignment fixpoint.
/// Deterministic given seed. Clusters are returned ordered by ascending
/// centroid, node indices ascending inside each cluster.
/// Throws errc::degenerate_clusters when k exceeds the number of distinct values.
std::vector<NodeSet> kmeans_partition(const Eigen::VectorXd& s, int k, std::uint64_t seed = 0);

/// Per-cluster membership ranking: nodes sorted descending by |s(i)|.
struct MembershipRanking {
    std::vector<std::pair<int, double>> cluster1;
    std::vector<std::pair<int, double>> cluster2;
};

MembershipRanking membership_strengths(const PartitionResult& result);

} // namespace opinet
