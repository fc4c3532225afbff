#include "opinet/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace opinet {

namespace {

// Zachary (1977), standard 34-node / 78-edge unweighted version.
constexpr std::string_view kKarateEdges = R"(# Zachary karate club, 34 nodes, 78 unweighted edges
1 2
1 3
1 4
1 5
1 6
1 7
1 8
1 9
1 11
1 12
1 13
1 14
1 18
1 20
1 22
1 32
2 3
2 4
2 8
2 14
2 18
2 20
2 22
2 31
3 4
3 8
3 9
3 10
3 14
3 28
3 29
3 33
4 8
4 13
4 14
5 7
5 11
6 7
6 11
6 17
7 17
9 31
9 33
9 34
10 34
14 34
15 33
15 34
16 33
16 34
19 33
19 34
20 34
21 33
21 34
23 33
23 34
24 26
24 28
24 30
24 33
24 34
25 26
25 28
25 32
26 32
27 30
27 34
28 34
29 32
29 34
30 33
30 34
31 33
31 34
32 33
32 34
33 34
)";

// Davis, Gardner & Gardner (1941): 18 women x 14 events attendance table,
// canonical ordering (matches the UCINET davis dataset).
constexpr int kWomenCount = 18;
constexpr int kEventCount = 14;
constexpr int kAttendance[kWomenCount * kEventCount] = {
    1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, // Evelyn
    1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, // Laura
    0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, // Theresa
    1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, // Brenda
    0, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, // Charlotte
    0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, // Frances
    0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, // Eleanor
    0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, // Pearl
    0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, // Ruth
    0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, // Verne
    0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, // Myra
    0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, // Katherina
    0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, // Sylvia
    0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, // Nora
    0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 0, 0, // Helen
    0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, // Dorothy
    0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, // Olivia
    0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, // Flora
};

const std::vector<std::string> kWomenNames = {
    "Evelyn", "Laura", "Theresa", "Brenda", "Charlotte", "Frances",
    "Eleanor", "Pearl", "Ruth", "Verne", "Myra", "Katherina",
    "Sylvia", "Nora", "Helen", "Dorothy", "Olivia", "Flora",
};

Graph southern_women() {
    Eigen::MatrixXd incidence(kWomenCount, kEventCount);
    for (int i = 0; i < kWomenCount; ++i)
        for (int j = 0; j < kEventCount; ++j)
            incidence(i, j) = kAttendance[i * kEventCount + j];

    // co-attendance counts: A = B B^T with the diagonal zeroed
    Eigen::MatrixXd adj = incidence * incidence.transpose();
    adj.diagonal().setZero();
    return Graph(kWomenNames, std::move(adj));
}

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

Graph path3() {
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(3, 3);
    adj(0, 1) = adj(1, 0) = 1.0;
    adj(1, 2) = adj(2, 1) = 1.0;
    return Graph(numbered_labels(3), std::move(adj));
}

Graph star4() {
    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(4, 4);
    for (int leaf = 1; leaf < 4; ++leaf) adj(0, leaf) = adj(leaf, 0) = 1.0;
    return Graph(numbered_labels(4), std::move(adj));
}

} // namespace

Graph complete_graph(int k) {
    if (k < 2) fail(errc::invalid_argument, "complete graph needs at least 2 nodes");
    Eigen::MatrixXd adj = Eigen::MatrixXd::Ones(k, k);
    adj.diagonal().setZero();
    return Graph(numbered_labels(k), std::move(adj));
}

namespace {

// parse_edge_list indexes nodes by first appearance; datasets with numeric
// labels are reordered so node i carries label i+1 and golden tests read
// literally.
Graph sorted_by_numeric_label(const Graph& g) {
    NodeSet order(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return std::stoi(g.label(a)) < std::stoi(g.label(b)); });
    return induced_subgraph(g, order).graph;
}

} // namespace

Graph builtin_dataset(std::string_view name) {
    if (name == "karate") return sorted_by_numeric_label(parse_edge_list(kKarateEdges));
    if (name == "southern_women") return southern_women();
    if (name == "path3") return path3();
    if (name == "star4") return star4();
    if (name.starts_with("complete(") && name.ends_with(")")) {
        const std::string_view inner = name.substr(9, name.size() - 10);
        int k = 0;
        auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), k);
        if (ec != std::errc{} || ptr != inner.data() + inner.size())
            fail(errc::unknown_dataset, "bad complete(k) size '" + std::string(inner) + "'");
        return complete_graph(k);
    }
    fail(errc::unknown_dataset, "unknown dataset '" + std::string(name) + "'");
}

std::string_view karate_edge_list() { return kKarateEdges; }

const int* southern_women_incidence() { return kAttendance; }

} // namespace opinet
