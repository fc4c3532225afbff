#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opinet/datasets.hpp"
#include "opinet/dynamics.hpp"
#include "opinet/partition.hpp"
#include "opinet/verification.hpp"

namespace py = pybind11;
using namespace opinet;

namespace {

void bind_graph(py::module_& m) {
    py::class_<Graph>(m, "Graph")
        .def(py::init<std::vector<std::string>, Eigen::MatrixXd>(), py::arg("labels"),
             py::arg("adjacency"))
        .def_property_readonly("n", &Graph::size)
        .def_property_readonly("labels", &Graph::labels)
        .def_property_readonly("adjacency", &Graph::adjacency)
        .def("label", &Graph::label, py::arg("i"))
        .def("find_label", &Graph::find_label, py::arg("name"))
        .def("weight", &Graph::weight, py::arg("i"), py::arg("j"))
        .def("__len__", &Graph::size)
        .def("__repr__", [](const Graph& g) {
            return "<opinet.Graph n=" + std::to_string(g.size()) + ">";
        });

    m.def("parse_edge_list", &parse_edge_list, py::arg("text"),
          "Parse 'u v [w]' lines into an undirected graph.");
    m.def("builtin_dataset", &builtin_dataset, py::arg("name"),
          "karate, southern_women, path3, star4, or complete(k).");
    m.def("complete_graph", &complete_graph, py::arg("k"));
    m.def("is_connected", &is_connected, py::arg("graph"));
    m.def("degree_vector", &degree_vector, py::arg("graph"));
    m.def(
        "induced_subgraph",
        [](const Graph& g, const NodeSet& nodes) {
            SubgraphResult result = induced_subgraph(g, nodes);
            return py::make_tuple(std::move(result.graph), std::move(result.parent_index));
        },
        py::arg("graph"), py::arg("nodes"),
        "Returns (subgraph, parent_indices).");
}

void bind_centrality(py::module_& m) {
    py::enum_<CentralityKind>(m, "CentralityKind")
        .value("degree", CentralityKind::degree)
        .value("uniform", CentralityKind::uniform)
        .value("eigenvector", CentralityKind::eigenvector)
        .value("custom", CentralityKind::custom);

    py::class_<CentralityVector>(m, "CentralityVector")
        .def_readonly("values", &CentralityVector::values)
        .def_readonly("kind", &CentralityVector::kind);

    m.def("degree_centrality", &degree_centrality, py::arg("graph"));
    m.def("uniform_centrality", &uniform_centrality, py::arg("graph"));
    m.def("eigenvector_centrality", &eigenvector_centrality, py::arg("graph"),
          py::arg("tol") = 1e-12, py::arg("max_iter") = 10000);
    m.def("custom_centrality", &custom_centrality, py::arg("graph"), py::arg("values"));
}

void bind_spectral(py::module_& m) {
    py::class_<InfluenceSystem>(m, "InfluenceSystem")
        .def_readonly("abar", &InfluenceSystem::abar)
        .def_readonly("lbar", &InfluenceSystem::lbar)
        .def_readonly("s_matrix", &InfluenceSystem::s_matrix)
        .def_readonly("h", &InfluenceSystem::h)
        .def_readonly("p_diag", &InfluenceSystem::p_diag)
        .def_readonly("q_diag", &InfluenceSystem::q_diag);

    py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
        .def_readonly("eigenvalues", &SpectralDecomposition::eigenvalues)
        .def_readonly("right_vectors", &SpectralDecomposition::right_vectors)
        .def_readonly("left_vectors", &SpectralDecomposition::left_vectors)
        .def_readonly("groups", &SpectralDecomposition::groups)
        .def_readonly("eps_mult", &SpectralDecomposition::eps_mult);

    m.def("build_influence", &build_influence, py::arg("graph"), py::arg("rho"));
    m.def("laplacian_of_graph", &laplacian_of_graph, py::arg("graph"));
    m.def("eigendecompose", &eigendecompose, py::arg("system"), py::arg("eps_mult") = 1e-8);
    m.def(
        "eigenvalue_groups",
        [](const SpectralDecomposition& dec, double eps) { return eigenvalue_groups(dec, eps); },
        py::arg("decomposition"), py::arg("eps"));
}

void bind_dynamics(py::module_& m) {
    py::class_<OpinionTrajectory>(m, "OpinionTrajectory")
        .def_readonly("times", &OpinionTrajectory::times)
        .def_readonly("states", &OpinionTrajectory::states);

    py::class_<ProbabilityState>(m, "ProbabilityState")
        .def_readonly("p", &ProbabilityState::p)
        .def_readonly("step", &ProbabilityState::step);

    py::class_<MarkovTrajectory>(m, "MarkovTrajectory")
        .def_readonly("states", &MarkovTrajectory::states)
        .def_readonly("diversity", &MarkovTrajectory::diversity);

    py::class_<MarkovClassification>(m, "MarkovClassification")
        .def_readonly("irreducible", &MarkovClassification::irreducible)
        .def_readonly("aperiodic", &MarkovClassification::aperiodic);

    m.def("solve_opinions", &solve_opinions, py::arg("decomposition"), py::arg("x0"),
          py::arg("tau"), py::arg("times"));
    m.def("agreement_component", &agreement_component, py::arg("decomposition"), py::arg("x"));
    m.def("disagreement_state", &disagreement_state, py::arg("decomposition"), py::arg("x"));
    m.def("diversity_energy", &diversity_energy, py::arg("graph"), py::arg("z"));
    m.def("projected_mode", &projected_mode, py::arg("decomposition"), py::arg("x0"),
          py::arg("tau"), py::arg("t"));
    m.def(
        "entropy_diversity",
        [](const Eigen::VectorXd& u2) {
            const EntropyDiversity result = entropy_diversity(u2);
            return py::make_tuple(result.entropy, result.diversity);
        },
        py::arg("u2"), "Returns (entropy, diversity).");
    m.def("inverse_simpson_diversity", &inverse_simpson_diversity, py::arg("u2"));
    m.def("markov_trajectory", &markov_trajectory, py::arg("system"), py::arg("p0"),
          py::arg("steps"));
    m.def("markov_classify", &markov_classify, py::arg("system"), py::arg("eps") = 1e-8);
    m.def("graph_period", &graph_period, py::arg("graph"));
}

void bind_partition(py::module_& m) {
    py::class_<PartitionResult>(m, "PartitionResult")
        .def_readonly("s", &PartitionResult::s)
        .def_readonly("cluster1", &PartitionResult::cluster1)
        .def_readonly("cluster2", &PartitionResult::cluster2)
        .def_readonly("strengths", &PartitionResult::strengths)
        .def_readonly("multiplicity_used", &PartitionResult::multiplicity_used)
        .def_readonly("used_initial_state", &PartitionResult::used_initial_state);

    py::enum_<StopReason>(m, "StopReason")
        .value("multiplicity_gt_1", StopReason::multiplicity_gt_1)
        .value("too_small", StopReason::too_small)
        .value("max_depth", StopReason::max_depth)
        .value("disconnected_split", StopReason::disconnected_split);

    py::class_<PartitionTree>(m, "PartitionTree")
        .def_readonly("nodes", &PartitionTree::nodes)
        .def_readonly("split", &PartitionTree::split)
        .def_readonly("children", &PartitionTree::children)
        .def_readonly("stop", &PartitionTree::stop)
        .def_readonly("depth", &PartitionTree::depth);

    py::class_<MembershipRanking>(m, "MembershipRanking")
        .def_readonly("cluster1", &MembershipRanking::cluster1)
        .def_readonly("cluster2", &MembershipRanking::cluster2);

    m.def("bipartition", &bipartition, py::arg("decomposition"),
          py::arg("x0") = std::optional<Eigen::VectorXd>{});
    m.def("disagreement_direction", &disagreement_direction, py::arg("decomposition"),
          py::arg("x0"));
    m.def("fiedler_baseline", &fiedler_baseline, py::arg("graph"), py::arg("eps_mult") = 1e-8);
    m.def(
        "iterative_partition",
        [](const Graph& g, CentralityKind kind, int min_size, int max_depth, double eps_mult) {
            IterativePartitionOptions options;
            options.min_size = min_size;
            options.max_depth = max_depth;
            options.eps_mult = eps_mult;
            return iterative_partition(g, kind, options);
        },
        py::arg("graph"), py::arg("centrality") = CentralityKind::degree,
        py::arg("min_size") = 3, py::arg("max_depth") = 16, py::arg("eps_mult") = 1e-8);
    m.def("tree_leaves", &tree_leaves, py::arg("tree"));
    m.def("kmeans_partition", &kmeans_partition, py::arg("s"), py::arg("k"),
          py::arg("seed") = 0);
    m.def("membership_strengths", &membership_strengths, py::arg("result"));
}

} // namespace

PYBIND11_MODULE(_opinet, m) {
    m.doc() = "Centrality-weighted opinion dynamics and spectral network partition";

    static py::exception<Error> error_type(m, "Error", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string message = std::string(errc_name(e.code())) + ": " + e.what();
            error_type(message.c_str());
        }
    });

    bind_graph(m);
    bind_centrality(m);
    bind_spectral(m);
    bind_dynamics(m);
    bind_partition(m);
}
