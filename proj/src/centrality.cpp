#include "opinet/centrality.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "opinet/errors.hpp"

namespace opinet {

const char* centrality_kind_name(CentralityKind kind) noexcept {
    switch (kind) {
        case CentralityKind::degree: return "degree";
        case CentralityKind::uniform: return "uniform";
        case CentralityKind::eigenvector: return "eigenvector";
        case CentralityKind::custom: return "custom";
    }
    return "?";
}

namespace {

void require_positive(const Eigen::VectorXd& values, const char* what) {
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (!(values[i] > 0.0))
            fail(errc::positivity_violation,
                 std::string(what) + " has non-positive entry at index " + std::to_string(i));
}

} // namespace

CentralityVector degree_centrality(const Graph& g) {
    Eigen::VectorXd d = degree_vector(g);
    require_positive(d, "degree centrality");
    return {std::move(d), CentralityKind::degree};
}

CentralityVector uniform_centrality(const Graph& g) {
    return {Eigen::VectorXd::Ones(g.size()), CentralityKind::uniform};
}

CentralityVector eigenvector_centrality(const Graph& g, double tol, int max_iter) {
    if (!(tol > 0.0)) fail(errc::invalid_argument, "tol must be positive");
    if (!is_connected(g)) fail(errc::disconnected, "eigenvector centrality needs a connected graph");

    const auto& a = g.adjacency();
    const int n = g.size();

    // Power iteration on A + I: the shift keeps the Perron eigenvalue strictly
    // dominant on bipartite graphs (where +/-lambda_max would otherwise tie).
    Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 1.0 / n);
    for (int iter = 0; iter < max_iter; ++iter) {
        Eigen::VectorXd next = a * v + v;
        next /= next.sum(); // entries stay positive, so the 1-norm is the sum
        const double delta = (next - v).lpNorm<1>();
        v = std::move(next);
        if (delta <= tol) {
            require_positive(v, "eigenvector centrality");
            return {std::move(v), CentralityKind::eigenvector};
        }
    }
    throw ConvergenceError("power iteration did not converge after " + std::to_string(max_iter) +
                               " iterations",
                           std::vector<double>(v.data(), v.data() + v.size()), max_iter);
}

CentralityVector custom_centrality(const Graph& g, const Eigen::VectorXd& values) {
    if (values.size() != g.size())
        fail(errc::length_mismatch, "centrality length " + std::to_string(values.size()) +
                                        " does not match node count " + std::to_string(g.size()));
    require_positive(values, "custom centrality");
    return {values, CentralityKind::custom};
}

CentralityVector parse_centrality_file(const Graph& g, std::string_view text) {
    Eigen::VectorXd values = Eigen::VectorXd::Zero(g.size());
    std::vector<char> filled(static_cast<std::size_t>(g.size()), 0);

    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string node, value_token;
        if (!(ls >> node)) continue;
        if (node.front() == '#') continue;
        if (!(ls >> value_token))
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected 'node value'");

        const auto idx = g.find_label(node);
        if (!idx)
            fail(errc::parse_error,
                 "line " + std::to_string(line_no) + ": unknown node '" + node + "'");
        if (filled[static_cast<std::size_t>(*idx)])
            fail(errc::parse_error,
                 "line " + std::to_string(line_no) + ": duplicate node '" + node + "'");

        double value = 0.0;
        const char* begin = value_token.data();
        const char* end = begin + value_token.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end || !std::isfinite(value))
            fail(errc::parse_error,
                 "line " + std::to_string(line_no) + ": bad value '" + value_token + "'");

        values[*idx] = value;
        filled[static_cast<std::size_t>(*idx)] = 1;
    }

    for (int i = 0; i < g.size(); ++i)
        if (!filled[static_cast<std::size_t>(i)])
            fail(errc::length_mismatch, "no centrality value for node '" + g.label(i) + "'");

    return custom_centrality(g, values);
}

CentralityVector make_centrality(const Graph& g, CentralityKind kind,
                                 const Eigen::VectorXd* custom_values) {
    switch (kind) {
        case CentralityKind::degree: return degree_centrality(g);
        case CentralityKind::uniform: return uniform_centrality(g);
        case CentralityKind::eigenvector: return eigenvector_centrality(g);
        case CentralityKind::custom:
            if (!custom_values)
                fail(errc::invalid_argument, "custom centrality requires explicit values");
            return custom_centrality(g, *custom_values);
    }
    fail(errc::invalid_argument, "unknown centrality kind");
}

} // namespace opinet
