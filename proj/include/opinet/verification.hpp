#pragma once

#include <string>

#include "opinet/dynamics.hpp"
#include "opinet/influence.hpp"
#include "opinet/spectral.hpp"

namespace opinet {

struct PropertyReport {
    bool pass = false;
    std::string detail;
};

/// Exactly one eigenvalue of lbar within `tol` of zero, all others above tol.
PropertyReport check_single_zero_eigenvalue(const SpectralDecomposition& dec, double tol = 1e-8);

/// Oracle cross-check: a general nonsymmetric eigensolver applied directly to
/// abar must return eigenvalues with |Im| <= tol. This is the one place a
/// nonsymmetric solve is permitted; production paths go through s_matrix.
PropertyReport check_real_spectrum_oracle(const InfluenceSystem& sys, double tol = 1e-8);

/// Diagonalizability realized numerically: || U diag(1 - lambda) U^-1 - abar ||_max
/// <= tol, with U the right-eigenvector matrix and U^-1 from an LU solve.
PropertyReport check_diagonalizable_reconstruction(const InfluenceSystem& sys,
                                                   const SpectralDecomposition& dec,
                                                   double tol = 1e-8);

/// Eigenvalue aperiodicity criterion (min eig of abar > -1 + eps) must agree
/// with the combinatorial period of the graph.
PropertyReport check_aperiodicity_consistency(const Graph& g, const InfluenceSystem& sys,
                                              double eps = 1e-8);

/// Combinatorial period of a connected graph: gcd of level[u] + 1 - level[v]
/// over all directed edges of the bidirected structure (1 = aperiodic,
/// 2 = bipartite).
int graph_period(const Graph& g);

} // namespace opinet
