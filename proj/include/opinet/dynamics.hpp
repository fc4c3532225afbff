#pragma once

#include <vector>

#include <Eigen/Dense>

#include "opinet/spectral.hpp"

namespace opinet {

/// Opinion vector sampled on a strictly increasing time grid.
/// states.row(k) is the opinion vector at times[k].
struct OpinionTrajectory {
    std::vector<double> times;
    Eigen::MatrixXd states;
};

/// Closed-form solution x(t) = sum_i e^{-t lambda_i / tau} u_i (v_i^T x0),
/// evaluated exactly at each requested time (no ODE integration).
OpinionTrajectory solve_opinions(const SpectralDecomposition& dec, const Eigen::VectorXd& x0,
                                 double tau, std::vector<double> times);

/// Component of x in the agreement subspace: u_1 (v_1^T x).
Eigen::VectorXd agreement_component(const SpectralDecomposition& dec, const Eigen::VectorXd& x);

/// x minus its agreement component (projection orthogonal to span{1} in the
/// biorthogonal sense).
Eigen::VectorXd disagreement_state(const SpectralDecomposition& dec, const Eigen::VectorXd& x);

/// E(z) = z^T L z = 1/2 sum_ij a_ij (z_i - z_j)^2 on the raw adjacency.
double diversity_energy(const Graph& g, const Eigen::VectorXd& z);

/// The lambda_2-group component of the solution at time t:
/// e^{-t lambda_2 / tau} sum_{l in group} u_l (v_l^T x0).
Eigen::VectorXd projected_mode(const SpectralDecomposition& dec, const Eigen::VectorXd& x0,
                               double tau, double t);

struct EntropyDiversity {
    double entropy;   // H = -sum u_i^2 ln u_i^2, with 0 ln 0 := 0
    double diversity; // D = 1 / H
};

/// Entropy diversity of a unit-Euclidean-norm vector (the squares form a
/// distribution). One-hot input has H = 0 and raises errc::divergent_diversity.
EntropyDiversity entropy_diversity(const Eigen::VectorXd& u2_combined);

/// Inverse Simpson diversity 1 / sum u_i^4 of a unit-norm vector; in [1, n].
double inverse_simpson_diversity(const Eigen::VectorXd& u2_combined);

/// Per-individual support probabilities at a discrete step.
struct ProbabilityState {
    Eigen::VectorXd p;
    int step = 0;
};

struct MarkovTrajectory {
    std::vector<ProbabilityState> states; // states[k].step == k, k = 0..steps
    std::vector<double> diversity;        // D_k = 1/E_k, E_k = -sum p ln p (+inf when E_k = 0)
};

/// Iterates p_{k+1}^T = abar p_k^T for `steps` steps, recording the
/// entropy-diversity of every state. p0 entries must lie in [0, 1].
MarkovTrajectory markov_trajectory(const InfluenceSystem& sys, const Eigen::VectorXd& p0,
                                   int steps);

struct MarkovClassification {
    bool irreducible; // guaranteed by build_influence's connectivity check
    bool aperiodic;   // min eigenvalue of abar > -1 + eps
};

MarkovClassification markov_classify(const InfluenceSystem& sys, double eps = 1e-8);

} // namespace opinet
