#pragma once

#include <vector>

#include <Eigen/Dense>

#include "opinet/influence.hpp"

namespace opinet {

/// Full real eigensystem of lbar with biorthonormal left/right pairs.
///
///   eigenvalues     ascending lambda_1 <= ... <= lambda_n of lbar
///   right_vectors   columns u_i, unit Euclidean norm
///   left_vectors    columns v_i, scaled so v_i^T u_j = delta_ij
///   groups          indices clustered by equal eigenvalue at eps_mult
///
/// For a connected graph lambda_1 = 0 is simple; u_1 is pinned to 1/sqrt(n)
/// and v_1 rescaled to match. Every other u_i is sign-canonicalized: the
/// entry of largest magnitude (lowest index on near-ties) is made positive.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd right_vectors;
    Eigen::MatrixXd left_vectors;
    std::vector<std::vector<int>> groups;
    double eps_mult = 1e-8;

    int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
    Eigen::VectorXd right(int i) const { return right_vectors.col(i); }
    Eigen::VectorXd left(int i) const { return left_vectors.col(i); }
};

/// Eigensystem of lbar via the symmetric route: decompose s_matrix with a
/// self-adjoint solver, map eigenvectors through P^-1 (right) and P (left).
/// Never runs a nonsymmetric solver.
SpectralDecomposition eigendecompose(const InfluenceSystem& sys, double eps_mult = 1e-8);

/// Eigensystem of a symmetric matrix (left vectors equal right vectors);
/// used for the Fiedler baseline on the raw Laplacian.
SpectralDecomposition symmetric_decomposition(const Eigen::MatrixXd& sym, double eps_mult = 1e-8);

/// Groups ascending eigenvalues into equal-value clusters: adjacent values
/// join a group when they differ by at most eps * max(1, spectral radius).
std::vector<std::vector<int>> eigenvalue_groups(const Eigen::VectorXd& ascending_eigenvalues,
                                                double eps);
std::vector<std::vector<int>> eigenvalue_groups(const SpectralDecomposition& dec, double eps);

} // namespace opinet
