#include "opinet/influence.hpp"

#include <cmath>

#include "opinet/errors.hpp"

namespace opinet {

InfluenceSystem build_influence(const Graph& g, const CentralityVector& rho) {
    const int n = g.size();
    if (rho.values.size() != n)
        fail(errc::length_mismatch, "centrality length does not match node count");
    for (int i = 0; i < n; ++i)
        if (!(rho.values[i] > 0.0))
            fail(errc::positivity_violation, "centrality must be strictly positive");
    if (!is_connected(g)) fail(errc::disconnected, "influence matrix needs a connected graph");

    const auto& a = g.adjacency();
    Eigen::VectorXd h = a * rho.values;
    for (int i = 0; i < n; ++i)
        if (!(h[i] > 0.0))
            fail(errc::degenerate, "h[" + std::to_string(i) + "] = (A rho)[i] is not positive");

    InfluenceSystem sys;
    sys.h = h;
    sys.abar.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sys.abar(i, j) = a(i, j) * rho.values[j] / h[i];

    sys.lbar = -sys.abar;
    sys.lbar.diagonal().array() += 1.0;

    sys.p_diag = (rho.values.array() * h.array()).sqrt();
    sys.q_diag = rho.values.array().sqrt() / h.array().sqrt();

    // S = Q A Q. Fill the upper triangle and mirror so the matrix is
    // bitwise symmetric regardless of rounding order.
    sys.s_matrix.resize(n, n);
    for (int i = 0; i < n; ++i) {
        sys.s_matrix(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
            const double s = sys.q_diag[i] * a(i, j) * sys.q_diag[j];
            sys.s_matrix(i, j) = s;
            sys.s_matrix(j, i) = s;
        }
    }
    return sys;
}

Eigen::MatrixXd laplacian_of_graph(const Graph& g) {
    Eigen::MatrixXd lap = -g.adjacency();
    lap.diagonal() = degree_vector(g);
    return lap;
}

} // namespace opinet
