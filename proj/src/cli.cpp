#include "opinet/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "opinet/datasets.hpp"
#include "opinet/detail/rng.hpp"
#include "opinet/io.hpp"
#include "opinet/verification.hpp"

namespace opinet::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const RunConfig& config) {
    if (config.input.empty()) fail(errc::invalid_argument, "no input graph given");
    constexpr std::string_view prefix = "builtin:";
    if (config.input.starts_with(prefix))
        return builtin_dataset(std::string_view(config.input).substr(prefix.size()));
    return parse_edge_list(read_file(config.input));
}

CentralityVector load_centrality(const RunConfig& config, const Graph& g) {
    if (config.centrality == CentralityKind::custom) {
        if (config.centrality_file.empty())
            fail(errc::invalid_argument, "custom centrality requires --centrality-file");
        return parse_centrality_file(g, read_file(config.centrality_file));
    }
    return make_centrality(g, config.centrality);
}

// "random" | inline "a,b,c" | path to a one-value-per-line file
Eigen::VectorXd load_vector_spec(const std::string& spec, int n, std::uint64_t seed) {
    if (spec == "random") {
        detail::Rng rng(seed);
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) x[i] = rng.normal();
        return x;
    }
    if (spec.find(',') != std::string::npos) {
        Eigen::VectorXd x = io::parse_inline_vector(spec);
        if (x.size() != n)
            fail(errc::length_mismatch, "expected " + std::to_string(n) + " values, got " +
                                            std::to_string(x.size()));
        return x;
    }
    return io::parse_vector_file(read_file(spec), n);
}

std::optional<Eigen::VectorXd> load_x0(const RunConfig& config, int n) {
    if (config.x0.empty()) return std::nullopt;
    return load_vector_spec(config.x0, n, config.seed);
}

void require_format(const RunConfig& config, std::initializer_list<OutputFormat> allowed,
                    const char* command) {
    for (OutputFormat f : allowed)
        if (config.format == f) return;
    fail(errc::invalid_argument, std::string("unsupported output format for ") + command);
}

std::vector<double> simulation_times(const RunConfig& config) {
    if (!config.times.empty()) {
        const Eigen::VectorXd t = io::parse_inline_vector(config.times);
        return std::vector<double>(t.data(), t.data() + t.size());
    }
    if (config.samples < 2) fail(errc::invalid_argument, "need at least 2 samples");
    if (!(config.t_max > 0.0)) fail(errc::invalid_argument, "t-max must be positive");
    std::vector<double> times(static_cast<std::size_t>(config.samples));
    for (int k = 0; k < config.samples; ++k)
        times[static_cast<std::size_t>(k)] = config.t_max * k / (config.samples - 1);
    return times;
}

int run_verify(const RunConfig& config, const Graph& g, std::ostream& out) {
    const CentralityVector rho = make_centrality(
        g, config.centrality == CentralityKind::custom ? CentralityKind::degree
                                                       : config.centrality);
    const InfluenceSystem sys = build_influence(g, rho);
    const SpectralDecomposition dec = eigendecompose(sys, config.eps_mult);

    const std::pair<const char*, PropertyReport> reports[] = {
        {"PROP1 single zero eigenvalue", check_single_zero_eigenvalue(dec)},
        {"PROP2 real spectrum (nonsymmetric oracle)", check_real_spectrum_oracle(sys)},
        {"PROP3 diagonalizable reconstruction",
         check_diagonalizable_reconstruction(sys, dec)},
        {"PROP4 aperiodicity criterion vs period oracle",
         check_aperiodicity_consistency(g, sys, config.eps_mult)},
    };
    bool all_pass = true;
    for (const auto& [name, report] : reports) {
        out << (report.pass ? "PASS " : "FAIL ") << name << " — " << report.detail << "\n";
        all_pass = all_pass && report.pass;
    }
    return all_pass ? 0 : 2;
}

int dispatch(const RunConfig& config, std::ostream& out) {
    const Graph g = load_graph(config);

    if (config.command == Command::verify) return run_verify(config, g, out);

    if (config.command == Command::partition) {
        require_format(config, {OutputFormat::json, OutputFormat::dot}, "partition");
        const InfluenceSystem sys = build_influence(g, load_centrality(config, g));
        const SpectralDecomposition dec = eigendecompose(sys, config.eps_mult);
        const PartitionResult result = bipartition(dec, load_x0(config, g.size()));
        if (config.format == OutputFormat::dot)
            out << io::partition_dot(g, result);
        else
            out << io::partition_json(g, result).dump(2) << "\n";
        return 0;
    }

    if (config.command == Command::tree) {
        require_format(config, {OutputFormat::json}, "tree");
        IterativePartitionOptions options;
        options.min_size = config.min_size;
        options.max_depth = config.max_depth;
        options.eps_mult = config.eps_mult;
        const PartitionTree tree = iterative_partition(g, config.centrality, options);
        out << io::tree_json(g, tree).dump(2) << "\n";
        return 0;
    }

    if (config.command == Command::kmeans) {
        require_format(config, {OutputFormat::json}, "kmeans");
        if (!config.k) fail(errc::invalid_argument, "kmeans requires --k");
        const InfluenceSystem sys = build_influence(g, load_centrality(config, g));
        const SpectralDecomposition dec = eigendecompose(sys, config.eps_mult);
        const PartitionResult base = bipartition(dec, load_x0(config, g.size()));
        const auto clusters = kmeans_partition(base.s, *config.k, config.seed);
        io::json result;
        result["clusters"] = io::json::array();
        for (const auto& cluster : clusters) {
            io::json labels = io::json::array();
            for (int v : cluster) labels.push_back(g.label(v));
            result["clusters"].push_back(labels);
        }
        result["s"] = io::json::array();
        for (Eigen::Index i = 0; i < base.s.size(); ++i) result["s"].push_back(base.s[i]);
        result["k"] = *config.k;
        out << result.dump(2) << "\n";
        return 0;
    }

    if (config.command == Command::simulate) {
        require_format(config, {OutputFormat::json, OutputFormat::csv}, "simulate");
        const auto x0 = load_x0(config, g.size());
        if (!x0) fail(errc::invalid_argument, "simulate requires --x0");
        const InfluenceSystem sys = build_influence(g, load_centrality(config, g));
        const SpectralDecomposition dec = eigendecompose(sys, config.eps_mult);
        const OpinionTrajectory traj =
            solve_opinions(dec, *x0, config.tau, simulation_times(config));
        if (config.format == OutputFormat::csv)
            out << io::trajectory_csv(g, traj);
        else
            out << io::trajectory_json(g, traj).dump(2) << "\n";
        return 0;
    }

    if (config.command == Command::markov) {
        require_format(config, {OutputFormat::json, OutputFormat::csv}, "markov");
        if (config.p0.empty()) fail(errc::invalid_argument, "markov requires --p0");
        const Eigen::VectorXd p0 = load_vector_spec(config.p0, g.size(), config.seed);
        const InfluenceSystem sys = build_influence(g, load_centrality(config, g));
        const MarkovTrajectory traj = markov_trajectory(sys, p0, config.steps);
        if (config.format == OutputFormat::csv) {
            out << io::markov_csv(g, traj);
            return 0;
        }
        io::json result = io::markov_json(g, traj);
        const SpectralDecomposition dec = eigendecompose(sys, config.eps_mult);
        const MarkovClassification cls = markov_classify(sys, config.eps_mult);
        result["irreducible"] = cls.irreducible;
        result["aperiodic"] = cls.aperiodic;
        const Eigen::VectorXd limit = agreement_component(dec, p0);
        result["limit"] = io::json::array();
        for (Eigen::Index i = 0; i < limit.size(); ++i) result["limit"].push_back(limit[i]);
        out << result.dump(2) << "\n";
        return 0;
    }

    if (config.command == Command::diversity) {
        require_format(config, {OutputFormat::json}, "diversity");
        const InfluenceSystem sys = build_influence(g, load_centrality(config, g));
        const SpectralDecomposition dec = eigendecompose(sys, config.eps_mult);
        // diversity indices are defined on the normalized lambda_2 eigenvector
        // (the combined lambda_2 projection of x0 when the multiplicity is higher)
        const int m2 = static_cast<int>(dec.groups.at(1).size());
        Eigen::VectorXd direction;
        if (m2 == 1) {
            direction = dec.right(dec.groups[1].front());
        } else {
            const auto x0 = load_x0(config, g.size());
            if (!x0)
                fail(errc::initial_state_required,
                     "lambda_2 multiplicity > 1: diversity needs --x0");
            direction = disagreement_direction(dec, *x0);
            const double norm = direction.norm();
            if (norm <= 1e-12)
                fail(errc::indecisive_partition,
                     "initial state has no component in the lambda_2 eigenspace");
            direction /= norm;
        }
        const EntropyDiversity entropy = entropy_diversity(direction);
        io::json result;
        result["multiplicity"] = m2;
        result["entropy"] = entropy.entropy;
        result["entropy_diversity"] = entropy.diversity;
        result["inverse_simpson"] = inverse_simpson_diversity(direction);
        result["energy"] = diversity_energy(g, direction);
        out << result.dump(2) << "\n";
        return 0;
    }

    if (config.command == Command::spectrum) {
        require_format(config, {OutputFormat::json}, "spectrum");
        const InfluenceSystem sys = build_influence(g, load_centrality(config, g));
        const SpectralDecomposition dec = eigendecompose(sys, config.eps_mult);
        out << io::spectrum_json(dec, config.matrices ? &sys : nullptr).dump(2) << "\n";
        return 0;
    }

    fail(errc::invalid_argument, "unknown command");
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(config, out);
    } catch (const Error& e) {
        io::json detail;
        detail["error"] = errc_name(e.code());
        detail["message"] = e.what();
        err << detail.dump() << "\n";
        return e.code() == errc::convergence_failure || e.code() == errc::degenerate ? 2 : 1;
    } catch (const std::exception& e) {
        io::json detail;
        detail["error"] = "InternalError";
        detail["message"] = e.what();
        err << detail.dump() << "\n";
        return 2;
    }
}

} // namespace opinet::cli
