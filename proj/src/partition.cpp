#include "opinet/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "opinet/detail/rng.hpp"
#include "opinet/errors.hpp"
#include "opinet/influence.hpp"

namespace opinet {

const char* stop_reason_name(StopReason reason) noexcept {
    switch (reason) {
        case StopReason::multiplicity_gt_1: return "multiplicity_gt_1";
        case StopReason::too_small: return "too_small";
        case StopReason::max_depth: return "max_depth";
        case StopReason::disconnected_split: return "disconnected_split";
    }
    return "?";
}

namespace {

PartitionResult result_from_signs(Eigen::VectorXd s, int multiplicity,
                                  std::optional<Eigen::VectorXd> x0) {
    // Entries at roundoff scale are exact zeros of the eigenvector (P3's
    // center node, say); snap them so the s(i) <= 0 tie rule reads literally
    // and does not depend on the sign of 1e-17 noise.
    const double zero_tol = 1e-12 * s.cwiseAbs().maxCoeff();
    for (int i = 0; i < s.size(); ++i)
        if (std::abs(s[i]) <= zero_tol) s[i] = 0.0;

    PartitionResult res;
    res.strengths = s.cwiseAbs();
    res.multiplicity_used = multiplicity;
    res.used_initial_state = std::move(x0);
    for (int i = 0; i < s.size(); ++i) {
        if (s[i] > 0.0)
            res.cluster1.push_back(i);
        else
            res.cluster2.push_back(i); // ties s(i) = 0 go to cluster2
    }
    res.s = std::move(s);
    return res;
}

} // namespace

Eigen::VectorXd disagreement_direction(const SpectralDecomposition& dec,
                                       const Eigen::VectorXd& x0) {
    if (x0.size() != dec.size()) fail(errc::length_mismatch, "x0 length does not match");
    if (dec.groups.size() < 2) fail(errc::invalid_argument, "no lambda_2 group");
    Eigen::VectorXd s = Eigen::VectorXd::Zero(dec.size());
    for (int idx : dec.groups[1])
        s += dec.right_vectors.col(idx) * dec.left_vectors.col(idx).dot(x0);
    return s;
}

PartitionResult bipartition(const SpectralDecomposition& dec,
                            const std::optional<Eigen::VectorXd>& x0) {
    if (dec.size() < 2) fail(errc::invalid_argument, "cannot bipartition a single node");
    if (dec.groups.size() < 2)
        fail(errc::invalid_argument, "all eigenvalues coincide; no lambda_2 group");

    // Disagreement values are taken in stationary-weighted (left-eigenvector)
    // coordinates: s = w . u with w = sqrt(n) * v_1. The weights are strictly
    // positive, so the sign clusters equal those of the raw eigenvector
    // formulas, while sum_i s(i) = 0 now holds exactly (w . u is orthogonal
    // to 1 by biorthogonality, which the raw right eigenvectors are not) and
    // the strengths |s| rank hub nodes the way the club leaders anchor their
    // factions. For a symmetric decomposition w = 1 and s is the plain
    // Fiedler vector.
    const Eigen::VectorXd weights =
        std::sqrt(double(dec.size())) * dec.left_vectors.col(0);
    if (!(weights.minCoeff() > 0.0))
        fail(errc::invalid_argument,
             "decomposition zero-mode is not an agreement mode; cannot partition");

    const int m2 = static_cast<int>(dec.groups[1].size());
    if (m2 == 1) {
        // (S1): s from u_2 alone, independent of the initial state
        Eigen::VectorXd s = weights.cwiseProduct(dec.right_vectors.col(dec.groups[1].front()));
        s /= s.norm();
        return result_from_signs(std::move(s), 1, std::nullopt);
    }

    if (!x0)
        fail(errc::initial_state_required,
             "lambda_2 has multiplicity " + std::to_string(m2) + "; an initial state is required");
    Eigen::VectorXd s = weights.cwiseProduct(disagreement_direction(dec, *x0));
    const double scale = std::max(1.0, x0->cwiseAbs().maxCoeff());
    if (s.cwiseAbs().maxCoeff() <= 1e-12 * scale)
        fail(errc::indecisive_partition,
             "initial state has no component in the lambda_2 eigenspace");
    return result_from_signs(std::move(s), m2, *x0);
}

PartitionResult fiedler_baseline(const Graph& g, double eps_mult) {
    if (!is_connected(g)) fail(errc::disconnected, "Fiedler baseline needs a connected graph");
    const SpectralDecomposition dec = symmetric_decomposition(laplacian_of_graph(g), eps_mult);
    return bipartition(dec, std::nullopt);
}

namespace {

std::vector<NodeSet> connected_components(const Graph& g) {
    const int n = g.size();
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    int count = 0;
    for (int start = 0; start < n; ++start) {
        if (component[static_cast<std::size_t>(start)] >= 0) continue;
        std::vector<int> stack{start};
        component[static_cast<std::size_t>(start)] = count;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (component[static_cast<std::size_t>(v)] < 0 && g.weight(u, v) > 0.0) {
                    component[static_cast<std::size_t>(v)] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    std::vector<NodeSet> sets(static_cast<std::size_t>(count));
    for (int v = 0; v < n; ++v) sets[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])].push_back(v);
    return sets;
}

struct TreeBuilder {
    const Graph& root;
    CentralityKind kind;
    IterativePartitionOptions options;

    PartitionTree build(NodeSet nodes, int depth) const {
        PartitionTree node;
        node.depth = depth;
        node.nodes = std::move(nodes);
        std::sort(node.nodes.begin(), node.nodes.end());

        if (static_cast<int>(node.nodes.size()) < options.min_size) {
            node.stop = StopReason::too_small;
            return node;
        }
        if (depth >= options.max_depth) {
            node.stop = StopReason::max_depth;
            return node;
        }

        const SubgraphResult sub = induced_subgraph(root, node.nodes);
        if (!is_connected(sub.graph)) {
            node.stop = StopReason::disconnected_split;
            for (const auto& comp : connected_components(sub.graph)) {
                NodeSet mapped;
                mapped.reserve(comp.size());
                for (int local : comp) mapped.push_back(node.nodes[static_cast<std::size_t>(local)]);
                node.children.push_back(build(std::move(mapped), depth + 1));
            }
            sort_children(node);
            return node;
        }

        const CentralityVector rho = make_centrality(sub.graph, kind);
        const SpectralDecomposition dec =
            eigendecompose(build_influence(sub.graph, rho), options.eps_mult);
        if (dec.groups.size() < 2 || dec.groups[1].size() > 1) {
            node.stop = StopReason::multiplicity_gt_1; // the paper's stop rule (no x0 here)
            return node;
        }

        PartitionResult split = bipartition(dec, std::nullopt);
        NodeSet c1, c2;
        for (int local : split.cluster1) c1.push_back(node.nodes[static_cast<std::size_t>(local)]);
        for (int local : split.cluster2) c2.push_back(node.nodes[static_cast<std::size_t>(local)]);
        split.cluster1 = c1;
        split.cluster2 = c2;
        node.split = std::move(split);
        node.children.push_back(build(std::move(c1), depth + 1));
        node.children.push_back(build(std::move(c2), depth + 1));
        sort_children(node);
        return node;
    }

    static void sort_children(PartitionTree& node) {
        std::sort(node.children.begin(), node.children.end(),
                  [](const PartitionTree& a, const PartitionTree& b) {
                      return a.nodes.front() < b.nodes.front();
                  });
    }
};

} // namespace

PartitionTree iterative_partition(const Graph& g, CentralityKind kind,
                                  const IterativePartitionOptions& options) {
    if (kind == CentralityKind::custom)
        fail(errc::invalid_argument,
             "custom centrality cannot be recomputed on subgraphs; use degree, uniform, "
             "or eigenvector");
    if (options.min_size < 1 || options.max_depth < 0)
        fail(errc::invalid_argument, "invalid iterative partition options");

    NodeSet all(static_cast<std::size_t>(g.size()));
    std::iota(all.begin(), all.end(), 0);
    return TreeBuilder{g, kind, options}.build(std::move(all), 0);
}

std::vector<NodeSet> tree_leaves(const PartitionTree& tree) {
    std::vector<NodeSet> leaves;
    if (tree.children.empty()) {
        leaves.push_back(tree.nodes);
        return leaves;
    }
    for (const auto& child : tree.children)
        for (auto& leaf : tree_leaves(child)) leaves.push_back(std::move(leaf));
    std::sort(leaves.begin(), leaves.end(),
              [](const NodeSet& a, const NodeSet& b) { return a.front() < b.front(); });
    return leaves;
}

std::vector<NodeSet> kmeans_partition(const Eigen::VectorXd& s, int k, std::uint64_t seed) {
    const int n = static_cast<int>(s.size());
    if (k < 1) fail(errc::invalid_argument, "k must be at least 1");
    if (k > n) fail(errc::degenerate_clusters, "k exceeds the number of points");

    std::vector<double> distinct(s.data(), s.data() + n);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (k > static_cast<int>(distinct.size()))
        fail(errc::degenerate_clusters, "k = " + std::to_string(k) + " exceeds the " +
                                            std::to_string(distinct.size()) +
                                            " distinct disagreement values");

    // k-means++ seeding
    detail::Rng rng(seed);
    std::vector<double> centers;
    centers.push_back(s[static_cast<int>(rng.index(static_cast<std::size_t>(n)))]);
    std::vector<double> dist2(static_cast<std::size_t>(n));
    while (static_cast<int>(centers.size()) < k) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (double c : centers) best = std::min(best, (s[i] - c) * (s[i] - c));
            dist2[static_cast<std::size_t>(i)] = best;
            total += best;
        }
        const double r = rng.uniform01() * total;
        double cum = 0.0;
        int chosen = n - 1;
        for (int i = 0; i < n; ++i) {
            cum += dist2[static_cast<std::size_t>(i)];
            if (r < cum && dist2[static_cast<std::size_t>(i)] > 0.0) {
                chosen = i;
                break;
            }
        }
        centers.push_back(s[chosen]);
    }
    std::sort(centers.begin(), centers.end());

    // Lloyd to an assignment fixpoint; nearest center wins, ties to the
    // smaller center (centers kept sorted, comparison is strict).
    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    bool changed = true;
    for (int iter = 0; iter < 1000 && changed; ++iter) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = std::abs(s[i] - centers[0]);
            for (int c = 1; c < k; ++c) {
                const double d = std::abs(s[i] - centers[static_cast<std::size_t>(c)]);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (assign[static_cast<std::size_t>(i)] != best) {
                assign[static_cast<std::size_t>(i)] = best;
                changed = true;
            }
        }
        std::vector<double> sum(static_cast<std::size_t>(k), 0.0);
        std::vector<int> count(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < n; ++i) {
            sum[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])] += s[i];
            ++count[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])];
        }
        for (int c = 0; c < k; ++c) {
            if (count[static_cast<std::size_t>(c)] > 0) {
                centers[static_cast<std::size_t>(c)] =
                    sum[static_cast<std::size_t>(c)] / count[static_cast<std::size_t>(c)];
            } else {
                // reseed an emptied cluster at the point farthest from its center
                int far = 0;
                double far_d = -1.0;
                for (int i = 0; i < n; ++i) {
                    const double d = std::abs(
                        s[i] - centers[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])]);
                    if (d > far_d) {
                        far_d = d;
                        far = i;
                    }
                }
                centers[static_cast<std::size_t>(c)] = s[far];
                changed = true;
            }
        }
        std::sort(centers.begin(), centers.end());
    }

    std::vector<NodeSet> clusters(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i)
        clusters[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(i);
    return clusters;
}

MembershipRanking membership_strengths(const PartitionResult& result) {
    auto ranked = [&](const NodeSet& cluster) {
        std::vector<std::pair<int, double>> out;
        out.reserve(cluster.size());
        for (int node : cluster) out.emplace_back(node, result.strengths[node]);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        return out;
    };
    return {ranked(result.cluster1), ranked(result.cluster2)};
}

} // namespace opinet
