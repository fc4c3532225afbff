#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "opinet/graph.hpp"

namespace opinet {

enum class CentralityKind { degree, uniform, eigenvector, custom };

const char* centrality_kind_name(CentralityKind kind) noexcept;

/// Strictly positive per-node weights used to weight neighbor influence.
struct CentralityVector {
    Eigen::VectorXd values;
    CentralityKind kind;
};

/// rho = weighted degree d = A*1. Requires a connected graph so all d_i > 0.
CentralityVector degree_centrality(const Graph& g);

/// rho = 1. With uniform centrality the influence matrix reduces to diag(d)^-1 A.
CentralityVector uniform_centrality(const Graph& g);

/// Perron eigenvector of A (unit 1-norm), by power iteration on A + I to
/// relative tolerance `tol`. Strictly positive on connected graphs.
/// Throws ConvergenceError with the last iterate after `max_iter` sweeps.
CentralityVector eigenvector_centrality(const Graph& g, double tol = 1e-12, int max_iter = 10000);

/// Validates an externally supplied positive vector of length n.
CentralityVector custom_centrality(const Graph& g, const Eigen::VectorXd& values);

/// Custom centrality file: one "node value" pair per line, labels matching the
/// graph; every node must appear exactly once.
CentralityVector parse_centrality_file(const Graph& g, std::string_view text);

/// Dispatch on kind (custom requires `custom_values`).
CentralityVector make_centrality(const Graph& g, CentralityKind kind,
                                 const Eigen::VectorXd* custom_values = nullptr);

} // namespace opinet
