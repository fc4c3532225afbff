#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "opinet/errors.hpp"

namespace opinet {

/// Ordered list of node indices into a parent Graph.
using NodeSet = std::vector<int>;

/// Undirected weighted graph over labelled nodes, stored as a dense
/// symmetric adjacency matrix with zero diagonal and nonnegative weights.
/// Immutable after construction; safe to share across threads read-only.
class Graph {
public:
    /// Validates symmetry (within 1e-12 relative, then mirrors the upper
    /// triangle so the stored matrix is exactly symmetric), zero diagonal,
    /// nonnegative weights, and unique labels.
    Graph(std::vector<std::string> labels, Eigen::MatrixXd adjacency);

    int size() const noexcept { return static_cast<int>(adj_.rows()); }
    const Eigen::MatrixXd& adjacency() const noexcept { return adj_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    double weight(int i, int j) const { return adj_(i, j); }

    std::optional<int> find_label(std::string_view name) const;

private:
    std::vector<std::string> labels_;
    Eigen::MatrixXd adj_;
};

/// Parses "u v [w]" lines into an undirected Graph. Node names are arbitrary
/// whitespace-free strings, indexed in order of first appearance; a missing
/// weight means 1.0. Lines whose first token starts with '#' are comments.
/// Rejects self-loops, negative weights, and duplicate edges whose weights
/// disagree (exact comparison; duplicates with equal weight are tolerated).
Graph parse_edge_list(std::string_view text);

/// True iff every node pair is joined by a path of positive-weight edges.
bool is_connected(const Graph& g);

/// d_i = sum_j a_ij (weighted degree; row sums of the adjacency).
Eigen::VectorXd degree_vector(const Graph& g);

struct SubgraphResult {
    Graph graph;
    NodeSet parent_index; // subgraph node k corresponds to parent node parent_index[k]
};

/// Subgraph induced by `nodes`, keeping all edges internal to the set.
/// Labels and edge weights are preserved; `nodes` must be unique and in range.
SubgraphResult induced_subgraph(const Graph& g, const NodeSet& nodes);

} // namespace opinet
