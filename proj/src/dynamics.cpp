#include "opinet/dynamics.hpp"

#include <cmath>
#include <limits>

#include "opinet/errors.hpp"

namespace opinet {

namespace {

void require_length(const Eigen::VectorXd& x, int n, const char* what) {
    if (x.size() != n)
        fail(errc::length_mismatch, std::string(what) + " has length " + std::to_string(x.size()) +
                                        ", expected " + std::to_string(n));
}

void require_unit_norm(const Eigen::VectorXd& u) {
    if (std::abs(u.norm() - 1.0) > 1e-8)
        fail(errc::invalid_argument, "vector must have unit Euclidean norm");
}

double shannon_entropy(const Eigen::VectorXd& masses) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < masses.size(); ++i)
        if (masses[i] > 0.0) h -= masses[i] * std::log(masses[i]);
    return h;
}

} // namespace

OpinionTrajectory solve_opinions(const SpectralDecomposition& dec, const Eigen::VectorXd& x0,
                                 double tau, std::vector<double> times) {
    const int n = dec.size();
    require_length(x0, n, "x0");
    if (!(tau > 0.0)) fail(errc::invalid_argument, "tau must be positive");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (!(times[k] > times[k - 1]))
            fail(errc::invalid_argument, "times must be strictly increasing");

    const Eigen::VectorXd coeffs = dec.left_vectors.transpose() * x0; // c_i = v_i^T x0

    OpinionTrajectory traj;
    traj.states.resize(static_cast<Eigen::Index>(times.size()), n);
    for (std::size_t k = 0; k < times.size(); ++k) {
        const Eigen::ArrayXd decay = (-times[k] / tau * dec.eigenvalues.array()).exp();
        traj.states.row(static_cast<Eigen::Index>(k)) =
            (dec.right_vectors * (decay * coeffs.array()).matrix()).transpose();
    }
    traj.times = std::move(times);
    return traj;
}

Eigen::VectorXd agreement_component(const SpectralDecomposition& dec, const Eigen::VectorXd& x) {
    require_length(x, dec.size(), "x");
    return dec.right_vectors.col(0) * (dec.left_vectors.col(0).dot(x));
}

Eigen::VectorXd disagreement_state(const SpectralDecomposition& dec, const Eigen::VectorXd& x) {
    return x - agreement_component(dec, x);
}

double diversity_energy(const Graph& g, const Eigen::VectorXd& z) {
    require_length(z, g.size(), "z");
    double energy = 0.0;
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) {
            const double d = z[i] - z[j];
            energy += g.weight(i, j) * d * d;
        }
    return energy;
}

Eigen::VectorXd projected_mode(const SpectralDecomposition& dec, const Eigen::VectorXd& x0,
                               double tau, double t) {
    const int n = dec.size();
    require_length(x0, n, "x0");
    if (!(tau > 0.0)) fail(errc::invalid_argument, "tau must be positive");
    if (dec.groups.size() < 2) fail(errc::invalid_argument, "no lambda_2 group");

    const auto& group = dec.groups[1];
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    for (int idx : group) y += dec.right_vectors.col(idx) * dec.left_vectors.col(idx).dot(x0);
    return std::exp(-t / tau * dec.eigenvalues[group.front()]) * y;
}

EntropyDiversity entropy_diversity(const Eigen::VectorXd& u2_combined) {
    require_unit_norm(u2_combined);
    const double h = shannon_entropy(u2_combined.array().square());
    if (h <= 0.0)
        fail(errc::divergent_diversity, "zero entropy (one-hot vector): diversity diverges");
    return {h, 1.0 / h};
}

double inverse_simpson_diversity(const Eigen::VectorXd& u2_combined) {
    require_unit_norm(u2_combined);
    return 1.0 / u2_combined.array().pow(4).sum();
}

MarkovTrajectory markov_trajectory(const InfluenceSystem& sys, const Eigen::VectorXd& p0,
                                   int steps) {
    const int n = static_cast<int>(sys.abar.rows());
    require_length(p0, n, "p0");
    if (steps < 0) fail(errc::invalid_argument, "steps must be nonnegative");
    for (int i = 0; i < n; ++i)
        if (p0[i] < 0.0 || p0[i] > 1.0)
            fail(errc::invalid_argument, "p0 entries must lie in [0, 1]");

    auto diversity_of = [](const Eigen::VectorXd& p) {
        const double e = shannon_entropy(p);
        return e > 0.0 ? 1.0 / e : std::numeric_limits<double>::infinity();
    };

    MarkovTrajectory traj;
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    traj.diversity.reserve(static_cast<std::size_t>(steps) + 1);
    Eigen::VectorXd p = p0;
    traj.states.push_back({p, 0});
    traj.diversity.push_back(diversity_of(p));
    for (int k = 1; k <= steps; ++k) {
        p = sys.abar * p; // p_{k+1}^T = p_k^T abar^T
        traj.states.push_back({p, k});
        traj.diversity.push_back(diversity_of(p));
    }
    return traj;
}

MarkovClassification markov_classify(const InfluenceSystem& sys, double eps) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sys.s_matrix,
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        fail(errc::degenerate, "symmetric eigensolver failed on S");
    const double min_eig = solver.eigenvalues().minCoeff();
    return {true, min_eig > -1.0 + eps};
}

} // namespace opinet
