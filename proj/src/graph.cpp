#include "opinet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace opinet {

Graph::Graph(std::vector<std::string> labels, Eigen::MatrixXd adjacency)
    : labels_(std::move(labels)), adj_(std::move(adjacency)) {
    const auto n = adj_.rows();
    if (n == 0) fail(errc::invalid_argument, "graph must have at least one node");
    if (adj_.cols() != n) fail(errc::invalid_argument, "adjacency matrix must be square");
    if (static_cast<Eigen::Index>(labels_.size()) != n)
        fail(errc::length_mismatch, "label count does not match node count");

    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            fail(errc::invalid_argument, "duplicate node label '" + l + "'");

    for (Eigen::Index i = 0; i < n; ++i) {
        if (adj_(i, i) != 0.0)
            fail(errc::self_loop, "nonzero diagonal at node " + labels_[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double a = adj_(i, j), b = adj_(j, i);
            if (a < 0.0 || b < 0.0)
                fail(errc::negative_weight, "negative weight between " +
                                                labels_[static_cast<std::size_t>(i)] + " and " +
                                                labels_[static_cast<std::size_t>(j)]);
            if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}))
                fail(errc::invalid_argument, "adjacency matrix is not symmetric");
            adj_(j, i) = a; // mirror so the stored matrix is exactly symmetric
        }
    }
}

std::optional<int> Graph::find_label(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

namespace {

double parse_weight(std::string_view token, int line_no) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        fail(errc::parse_error,
             "line " + std::to_string(line_no) + ": bad weight '" + std::string(token) + "'");
    if (!std::isfinite(value))
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": non-finite weight");
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = index.try_emplace(name, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(name);
        return it->second;
    };

    // (min,max) node pair -> weight; duplicates must agree exactly
    std::map<std::pair<int, int>, double> edges;

    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string u, v, w;
        if (!(ls >> u)) continue;          // blank line
        if (u.front() == '#') continue;    // comment line
        if (!(ls >> v))
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected 'u v [w]'");
        double weight = 1.0;
        if (ls >> w) {
            weight = parse_weight(w, line_no);
            std::string extra;
            if (ls >> extra)
                fail(errc::parse_error, "line " + std::to_string(line_no) + ": trailing tokens");
        }
        if (u == v)
            fail(errc::self_loop, "line " + std::to_string(line_no) + ": self-loop at '" + u + "'");
        if (weight < 0.0)
            fail(errc::negative_weight, "line " + std::to_string(line_no) + ": negative weight");

        const int a = intern(u), b = intern(v);
        const auto key = std::minmax(a, b);
        auto [it, inserted] = edges.try_emplace(key, weight);
        if (!inserted && it->second != weight)
            fail(errc::conflicting_edge, "line " + std::to_string(line_no) + ": edge " + u + "-" +
                                             v + " already has weight " +
                                             std::to_string(it->second));
    }

    if (labels.empty()) fail(errc::parse_error, "empty edge list");

    const int n = static_cast<int>(labels.size());
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [key, w] : edges) {
        adj(key.first, key.second) = w;
        adj(key.second, key.first) = w;
    }
    return Graph(std::move(labels), std::move(adj));
}

bool is_connected(const Graph& g) {
    const int n = g.size();
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!visited[static_cast<std::size_t>(v)] && g.weight(u, v) > 0.0) {
                visited[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

Eigen::VectorXd degree_vector(const Graph& g) {
    return g.adjacency().rowwise().sum();
}

SubgraphResult induced_subgraph(const Graph& g, const NodeSet& nodes) {
    if (nodes.empty()) fail(errc::empty_node_set, "induced subgraph of an empty node set");
    std::unordered_set<int> seen;
    for (int v : nodes) {
        if (v < 0 || v >= g.size())
            fail(errc::invalid_node_index, "node index " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second)
            fail(errc::invalid_node_index, "duplicate node index " + std::to_string(v));
    }

    const int m = static_cast<int>(nodes.size());
    std::vector<std::string> labels;
    labels.reserve(nodes.size());
    for (int v : nodes) labels.push_back(g.label(v));

    Eigen::MatrixXd adj(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) adj(i, j) = g.weight(nodes[static_cast<std::size_t>(i)],
                                                         nodes[static_cast<std::size_t>(j)]);

    return SubgraphResult{Graph(std::move(labels), std::move(adj)), nodes};
}

} // namespace opinet
