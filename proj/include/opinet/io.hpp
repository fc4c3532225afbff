#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "opinet/dynamics.hpp"
#include "opinet/graph.hpp"
#include "opinet/partition.hpp"
#include "opinet/spectral.hpp"

namespace opinet::io {

using json = nlohmann::ordered_json;

/// {"clusters": [[labels], [labels]], "s": [...], "strengths": [...], "multiplicity": m}
json partition_json(const Graph& g, const PartitionResult& result);

/// Graphviz rendering of a bipartition: cluster1 nodes square, cluster2
/// circle, node width monotone in membership strength.
std::string partition_dot(const Graph& g, const PartitionResult& result);

/// {"eigenvalues": [...], "right_vectors": [[u_i]...], "left_vectors": [[v_i]...], "groups": [...]}
/// with optional row-major "abar"/"lbar"/"s_matrix"/"h" blocks.
json spectrum_json(const SpectralDecomposition& dec, const InfluenceSystem* sys = nullptr);

/// Row-major nested-array form of a dense matrix.
json matrix_json(const Eigen::MatrixXd& m);

json trajectory_json(const Graph& g, const OpinionTrajectory& traj);

/// CSV lines "t,x_1,...,x_n" with a label header row; 17-significant-digit
/// round-trip formatting.
std::string trajectory_csv(const Graph& g, const OpinionTrajectory& traj);

json markov_json(const Graph& g, const MarkovTrajectory& traj);
std::string markov_csv(const Graph& g, const MarkovTrajectory& traj);

json tree_json(const Graph& g, const PartitionTree& tree);

/// Parses "a,b,c" into a vector (errc::parse_error on malformed numbers).
Eigen::VectorXd parse_inline_vector(std::string_view text);

/// One real per line in node order, '#' comments allowed; must yield
/// exactly n values.
Eigen::VectorXd parse_vector_file(std::string_view text, int n);

} // namespace opinet::io
