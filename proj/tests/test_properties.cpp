#include <doctest.h>

#include "opinet/datasets.hpp"
#include "opinet/partition.hpp"
#include "opinet/verification.hpp"
#include "support/random_graphs.hpp"

using namespace opinet;

// Proposition suites over the random connected corpus (n in [3, 50], weights
// in (0, 1]). The same checks back the CLI `verify` command and criterion 5.
TEST_SUITE_BEGIN("propositions");

TEST_CASE("proposition corpus: single zero eigenvalue, real spectrum, reconstruction") {
    const auto corpus = test::proposition_corpus(200);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const Graph& g = corpus[k];
        const InfluenceSystem sys = build_influence(g, degree_centrality(g));
        const SpectralDecomposition dec = eigendecompose(sys);

        const PropertyReport prop1 = check_single_zero_eigenvalue(dec);
        const PropertyReport prop2 = check_real_spectrum_oracle(sys);
        const PropertyReport prop3 = check_diagonalizable_reconstruction(sys, dec);

        CAPTURE(k);
        CAPTURE(g.size());
        CHECK_MESSAGE(prop1.pass, prop1.detail);
        CHECK_MESSAGE(prop2.pass, prop2.detail);
        CHECK_MESSAGE(prop3.pass, prop3.detail);
    }
}

TEST_CASE("proposition 4: eigenvalue aperiodicity matches the combinatorial period") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 3 + static_cast<int>(seed % 10); // n <= 12
        // alternate between tree-like (often bipartite) and denser graphs so
        // both periodic and aperiodic cases occur
        const double extra = (seed % 2 == 0) ? 0.0 : 0.3;
        const Graph g = test::random_connected_graph(n, 40000 + seed, extra);
        const InfluenceSystem sys = build_influence(g, degree_centrality(g));
        const PropertyReport report = check_aperiodicity_consistency(g, sys);
        CAPTURE(seed);
        CHECK_MESSAGE(report.pass, report.detail);
        ++checked;
    }
    CHECK(checked == 100);
    // sanity: the oracle itself distinguishes the known cases
    CHECK(graph_period(builtin_dataset("path3")) == 2);
    CHECK(graph_period(builtin_dataset("star4")) == 2);
    CHECK(graph_period(builtin_dataset("complete(3)")) == 1);
    CHECK(graph_period(builtin_dataset("karate")) == 1);
}

TEST_CASE("propositions hold for uniform and eigenvector centralities") {
    // the general-rho claim: any strictly positive centrality keeps them true
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 5 + static_cast<int>(seed * 4);
        const Graph g = test::random_connected_graph(n, 77000 + seed);
        for (const CentralityKind kind :
             {CentralityKind::uniform, CentralityKind::eigenvector}) {
            const InfluenceSystem sys = build_influence(g, make_centrality(g, kind));
            const SpectralDecomposition dec = eigendecompose(sys);
            CHECK(check_single_zero_eigenvalue(dec).pass);
            CHECK(check_real_spectrum_oracle(sys).pass);
            CHECK(check_diagonalizable_reconstruction(sys, dec).pass);
            CHECK(check_aperiodicity_consistency(g, sys).pass);
        }
    }
}

TEST_CASE("partition stability across the corpus") {
    // time invariance and x0 independence (m2 = 1), spot-checked on a slice
    // of the proposition corpus
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 4 + static_cast<int>(seed % 16);
        const Graph g = test::random_connected_graph(n, 60000 + seed);
        const SpectralDecomposition dec =
            eigendecompose(build_influence(g, degree_centrality(g)));
        if (dec.groups[1].size() != 1) continue;

        const PartitionResult base = bipartition(dec);
        const double tau = 2.0;
        const Eigen::VectorXd x0 = test::random_vector(n, 123 + seed);
        const Eigen::VectorXd direction = disagreement_direction(dec, x0);
        if (direction.cwiseAbs().maxCoeff() <= 1e-12) continue;

        // x0 independence: the sign pattern of the projection matches u2's
        // clusters up to global flip
        NodeSet pos, rest;
        for (int i = 0; i < n; ++i) (direction[i] > 0 ? pos : rest).push_back(i);
        const bool direct = pos == base.cluster1 && rest == base.cluster2;
        NodeSet neg_pos, neg_rest;
        for (int i = 0; i < n; ++i) (direction[i] < 0 ? neg_pos : neg_rest).push_back(i);
        const bool flipped = neg_pos == base.cluster1 && neg_rest == base.cluster2;
        const bool has_exact_zero = [&] {
            for (int i = 0; i < n; ++i)
                if (direction[i] == 0.0) return true;
            return false;
        }();
        if (!has_exact_zero) CHECK((direct || flipped));

        // time invariance: the projection of x(t) is a positive multiple of
        // the projection of x0
        const double lambda2 = dec.eigenvalues[1];
        for (double t : {0.5, 2.0}) {
            const OpinionTrajectory traj = solve_opinions(dec, x0, tau, {t});
            const Eigen::VectorXd later =
                disagreement_direction(dec, traj.states.row(0).transpose());
            const double factor = std::exp(-t * lambda2 / tau);
            CHECK((later - factor * direction).cwiseAbs().maxCoeff() <=
                  1e-10 * direction.cwiseAbs().maxCoeff());
        }
    }
}

TEST_SUITE_END();
