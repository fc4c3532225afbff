#include "opinet/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "opinet/errors.hpp"

namespace opinet::io {

namespace {

// Shortest representation that round-trips the exact double (<= 17 s.f.).
std::string number(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

json vector_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

json labels_json(const Graph& g, const NodeSet& nodes) {
    json arr = json::array();
    for (int v : nodes) arr.push_back(g.label(v));
    return arr;
}

double parse_real(std::string_view token, const std::string& context) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value))
        fail(errc::parse_error, context + ": bad number '" + std::string(token) + "'");
    return value;
}

} // namespace

json partition_json(const Graph& g, const PartitionResult& result) {
    json out;
    out["clusters"] = json::array({labels_json(g, result.cluster1), labels_json(g, result.cluster2)});
    out["s"] = vector_json(result.s);
    out["strengths"] = vector_json(result.strengths);
    out["multiplicity"] = result.multiplicity_used;
    return out;
}

std::string partition_dot(const Graph& g, const PartitionResult& result) {
    const double max_strength = std::max(result.strengths.maxCoeff(), 1e-300);
    std::ostringstream out;
    out << "graph opinion_partition {\n";
    out << "  node [fixedsize=true, fontsize=10];\n";
    for (int i = 0; i < g.size(); ++i) {
        const bool in_c1 = result.s[i] > 0.0;
        const double width = 0.3 + 0.5 * (result.strengths[i] / max_strength);
        out << "  \"" << g.label(i) << "\" [shape=" << (in_c1 ? "square" : "circle")
            << ", width=" << number(width) << "];\n";
    }
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) {
            const double w = g.weight(i, j);
            if (w <= 0.0) continue;
            out << "  \"" << g.label(i) << "\" -- \"" << g.label(j) << "\"";
            if (w != 1.0) out << " [label=\"" << number(w) << "\"]";
            out << ";\n";
        }
    out << "}\n";
    return out.str();
}

json spectrum_json(const SpectralDecomposition& dec, const InfluenceSystem* sys) {
    json out;
    out["eigenvalues"] = vector_json(dec.eigenvalues);
    json right = json::array(), left = json::array();
    for (int i = 0; i < dec.size(); ++i) {
        right.push_back(vector_json(dec.right_vectors.col(i)));
        left.push_back(vector_json(dec.left_vectors.col(i)));
    }
    out["right_vectors"] = right;
    out["left_vectors"] = left;
    out["groups"] = dec.groups;
    if (sys) {
        out["abar"] = matrix_json(sys->abar);
        out["lbar"] = matrix_json(sys->lbar);
        out["s_matrix"] = matrix_json(sys->s_matrix);
        out["h"] = vector_json(sys->h);
    }
    return out;
}

json matrix_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
    return rows;
}

json trajectory_json(const Graph& g, const OpinionTrajectory& traj) {
    json out;
    out["labels"] = labels_json(g, [&] {
        NodeSet all(static_cast<std::size_t>(g.size()));
        for (int i = 0; i < g.size(); ++i) all[static_cast<std::size_t>(i)] = i;
        return all;
    }());
    out["times"] = traj.times;
    json states = json::array();
    for (Eigen::Index k = 0; k < traj.states.rows(); ++k)
        states.push_back(vector_json(traj.states.row(k)));
    out["states"] = states;
    return out;
}

std::string trajectory_csv(const Graph& g, const OpinionTrajectory& traj) {
    std::ostringstream out;
    out << "t";
    for (const auto& label : g.labels()) out << "," << label;
    out << "\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        out << number(traj.times[k]);
        for (Eigen::Index j = 0; j < traj.states.cols(); ++j)
            out << "," << number(traj.states(static_cast<Eigen::Index>(k), j));
        out << "\n";
    }
    return out.str();
}

json markov_json(const Graph& g, const MarkovTrajectory& traj) {
    json out;
    out["labels"] = json::array();
    for (const auto& label : g.labels()) out["labels"].push_back(label);
    json steps = json::array();
    for (const auto& state : traj.states) steps.push_back(vector_json(state.p));
    out["steps"] = steps;
    out["diversity"] = json::array();
    for (double d : traj.diversity)
        out["diversity"].push_back(d); // +inf serializes as null
    return out;
}

std::string markov_csv(const Graph& g, const MarkovTrajectory& traj) {
    std::ostringstream out;
    out << "k";
    for (const auto& label : g.labels()) out << "," << label;
    out << "\n";
    for (const auto& state : traj.states) {
        out << state.step;
        for (Eigen::Index j = 0; j < state.p.size(); ++j) out << "," << number(state.p[j]);
        out << "\n";
    }
    return out.str();
}

json tree_json(const Graph& g, const PartitionTree& tree) {
    json out;
    out["nodes"] = labels_json(g, tree.nodes);
    out["depth"] = tree.depth;
    if (tree.stop) out["stop"] = stop_reason_name(*tree.stop);
    if (tree.split) {
        json split;
        split["clusters"] = json::array(
            {labels_json(g, tree.split->cluster1), labels_json(g, tree.split->cluster2)});
        split["s"] = vector_json(tree.split->s);
        split["multiplicity"] = tree.split->multiplicity_used;
        out["split"] = split;
    }
    if (!tree.children.empty()) {
        json children = json::array();
        for (const auto& child : tree.children) children.push_back(tree_json(g, child));
        out["children"] = children;
    }
    return out;
}

Eigen::VectorXd parse_inline_vector(std::string_view text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        values.push_back(parse_real(token, "inline vector"));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

Eigen::VectorXd parse_vector_file(std::string_view text, int n) {
    std::vector<double> values;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue;
        if (token.front() == '#') continue;
        values.push_back(parse_real(token, "line " + std::to_string(line_no)));
    }
    if (static_cast<int>(values.size()) != n)
        fail(errc::length_mismatch, "expected " + std::to_string(n) + " values, got " +
                                        std::to_string(values.size()));
    return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

} // namespace opinet::io
