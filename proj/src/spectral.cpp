#include "opinet/spectral.hpp"

#include <cmath>

#include "opinet/errors.hpp"

namespace opinet {

namespace {

// Flip columns so the largest-magnitude entry is positive; ties broken by
// lowest index. "Tie" means within a relative 1e-9 of the maximum, which
// keeps the pick stable when symmetric structure makes entries equal up to
// roundoff.
void canonicalize_sign(Eigen::MatrixXd& right, Eigen::MatrixXd& left, int col) {
    const auto u = right.col(col);
    const double threshold = u.cwiseAbs().maxCoeff() * (1.0 - 1e-9);
    for (int i = 0; i < u.size(); ++i) {
        if (std::abs(u[i]) >= threshold) {
            if (u[i] < 0.0) {
                right.col(col) = -right.col(col);
                left.col(col) = -left.col(col);
            }
            return;
        }
    }
}

std::vector<std::vector<int>> group_ascending(const Eigen::VectorXd& values, double eps) {
    if (!(eps > 0.0)) fail(errc::invalid_argument, "eps must be positive");
    std::vector<std::vector<int>> groups;
    if (values.size() == 0) return groups;
    const double radius = values.cwiseAbs().maxCoeff();
    const double tol = eps * std::max(1.0, radius);
    groups.push_back({0});
    for (int i = 1; i < values.size(); ++i) {
        if (values[i] - values[i - 1] <= tol)
            groups.back().push_back(i);
        else
            groups.push_back({i});
    }
    return groups;
}

} // namespace

SpectralDecomposition eigendecompose(const InfluenceSystem& sys, double eps_mult) {
    const int n = static_cast<int>(sys.s_matrix.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sys.s_matrix);
    if (solver.info() != Eigen::Success)
        fail(errc::degenerate, "symmetric eigensolver failed on S");

    SpectralDecomposition dec;
    dec.eps_mult = eps_mult;
    dec.eigenvalues.resize(n);
    dec.right_vectors.resize(n, n);
    dec.left_vectors.resize(n, n);

    // Ascending mu of S maps to descending lambda = 1 - mu of lbar, so take
    // the solver's columns in reverse. Right vectors are P^-1 w normalized;
    // scaling the left vectors by the same norm keeps v_i^T u_j = delta_ij
    // (the w_i are orthonormal).
    for (int i = 0; i < n; ++i) {
        const int src = n - 1 - i;
        dec.eigenvalues[i] = 1.0 - solver.eigenvalues()[src];
        Eigen::VectorXd w = solver.eigenvectors().col(src);
        Eigen::VectorXd u = w.array() / sys.p_diag.array();
        const double norm = u.norm();
        dec.right_vectors.col(i) = u / norm;
        dec.left_vectors.col(i) = (w.array() * sys.p_diag.array()) * norm;
    }

    // Pin the agreement mode to its exact closed form.
    if (std::abs(dec.eigenvalues[0]) <= 1e-10) {
        dec.eigenvalues[0] = 0.0;
        dec.right_vectors.col(0) = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
        Eigen::VectorXd p2 = sys.p_diag.array().square();
        dec.left_vectors.col(0) = p2 * (std::sqrt(double(n)) / p2.sum());
    }

    for (int i = 1; i < n; ++i) canonicalize_sign(dec.right_vectors, dec.left_vectors, i);
    dec.groups = group_ascending(dec.eigenvalues, eps_mult);
    return dec;
}

SpectralDecomposition symmetric_decomposition(const Eigen::MatrixXd& sym, double eps_mult) {
    if (sym.rows() != sym.cols()) fail(errc::invalid_argument, "matrix must be square");
    if ((sym - sym.transpose()).cwiseAbs().maxCoeff() >
        1e-10 * std::max(1.0, sym.cwiseAbs().maxCoeff()))
        fail(errc::invalid_argument, "matrix is not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        fail(errc::degenerate, "symmetric eigensolver failed");

    SpectralDecomposition dec;
    dec.eps_mult = eps_mult;
    dec.eigenvalues = solver.eigenvalues();
    dec.right_vectors = solver.eigenvectors();
    dec.left_vectors = solver.eigenvectors();
    for (int i = 0; i < dec.size(); ++i) canonicalize_sign(dec.right_vectors, dec.left_vectors, i);
    dec.groups = group_ascending(dec.eigenvalues, eps_mult);
    return dec;
}

std::vector<std::vector<int>> eigenvalue_groups(const Eigen::VectorXd& ascending_eigenvalues,
                                                double eps) {
    return group_ascending(ascending_eigenvalues, eps);
}

std::vector<std::vector<int>> eigenvalue_groups(const SpectralDecomposition& dec, double eps) {
    return group_ascending(dec.eigenvalues, eps);
}

} // namespace opinet
