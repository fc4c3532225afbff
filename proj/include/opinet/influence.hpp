#pragma once

#include <Eigen/Dense>

#include "opinet/centrality.hpp"
#include "opinet/graph.hpp"

namespace opinet {

/// Centrality-weighted influence matrix and its similarity factors.
///
///   abar = diag(h)^-1 A diag(rho),  h = A rho      (row-stochastic)
///   lbar = I - abar                                (lbar * 1 = 0)
///   p_diag(i) = sqrt(rho_i h_i)                    (P diagonal)
///   q_diag(i) = sqrt(rho_i) / sqrt(h_i)            (Q diagonal)
///   s_matrix  = Q A Q = P abar P^-1                (symmetric)
///
/// The diagonal similarity P maps abar to the symmetric s_matrix, which is
/// what makes the spectrum real and the matrix diagonalizable; all spectral
/// work happens on s_matrix.
struct InfluenceSystem {
    Eigen::MatrixXd abar;
    Eigen::MatrixXd lbar;
    Eigen::MatrixXd s_matrix;
    Eigen::VectorXd h;
    Eigen::VectorXd p_diag;
    Eigen::VectorXd q_diag;
};

/// Builds the influence system for a connected graph and positive centrality.
/// Throws errc::disconnected for disconnected graphs, errc::degenerate if any
/// h_i fails to be positive, errc::length_mismatch on size mismatch.
InfluenceSystem build_influence(const Graph& g, const CentralityVector& rho);

/// Combinatorial Laplacian L = diag(A*1) - A of the raw adjacency.
Eigen::MatrixXd laplacian_of_graph(const Graph& g);

} // namespace opinet
