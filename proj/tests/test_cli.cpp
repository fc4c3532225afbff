#include <doctest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "opinet/cli.hpp"
#include "opinet/datasets.hpp"
#include "opinet/io.hpp"
#include "opinet/partition.hpp"
#include "support/helpers.hpp"

using namespace opinet;
using test::has_code;

namespace {

struct CliOutput {
    int exit_code;
    std::string out;
    std::string err;
};

CliOutput run_cli(const cli::RunConfig& config) {
    std::ostringstream out, err;
    const int code = cli::run(config, out, err);
    return {code, out.str(), err.str()};
}

cli::RunConfig base_config(cli::Command command, std::string input) {
    cli::RunConfig config;
    config.command = command;
    config.input = std::move(input);
    return config;
}

} // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("partition JSON schema") {
    const Graph karate = builtin_dataset("karate");
    const PartitionResult res =
        bipartition(eigendecompose(build_influence(karate, degree_centrality(karate))));
    const io::json doc = io::partition_json(karate, res);
    REQUIRE(doc.contains("clusters"));
    REQUIRE(doc["clusters"].size() == 2);
    CHECK(doc["clusters"][0].size() + doc["clusters"][1].size() == 34);
    CHECK(doc["s"].size() == 34);
    CHECK(doc["strengths"].size() == 34);
    CHECK(doc["multiplicity"] == 1);
}

TEST_CASE("spectrum JSON round-trips at full precision") {
    const Graph women = builtin_dataset("southern_women");
    const InfluenceSystem sys = build_influence(women, degree_centrality(women));
    const SpectralDecomposition dec = eigendecompose(sys);

    const std::string text = io::spectrum_json(dec, &sys).dump();
    const auto parsed = nlohmann::json::parse(text);

    for (int i = 0; i < dec.size(); ++i) {
        CHECK(parsed["eigenvalues"][static_cast<std::size_t>(i)].get<double>() ==
              dec.eigenvalues[i]);
        for (int r = 0; r < dec.size(); ++r) {
            CHECK(parsed["right_vectors"][static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]
                      .get<double>() == dec.right_vectors(r, i));
            CHECK(parsed["left_vectors"][static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]
                      .get<double>() == dec.left_vectors(r, i));
            CHECK(parsed["abar"][static_cast<std::size_t>(i)][static_cast<std::size_t>(r)]
                      .get<double>() == sys.abar(i, r));
        }
    }
}

TEST_CASE("DOT output encodes shape by cluster and width by strength") {
    const Graph p3 = builtin_dataset("path3");
    const PartitionResult res =
        bipartition(eigendecompose(build_influence(p3, degree_centrality(p3))));
    const std::string dot = io::partition_dot(p3, res);

    CHECK(dot.find("graph opinion_partition {") == 0);
    CHECK(dot.find("\"1\" [shape=square") != std::string::npos);
    CHECK(dot.find("\"2\" [shape=circle") != std::string::npos);
    CHECK(dot.find("\"3\" [shape=circle") != std::string::npos);
    CHECK(dot.find("\"1\" -- \"2\"") != std::string::npos);
    CHECK(dot.find("\"2\" -- \"3\"") != std::string::npos);

    // width monotone in strength: node 1 (max strength) wider than node 2 (zero)
    auto width_of = [&](const std::string& label) {
        const auto pos = dot.find("\"" + label + "\" [shape=");
        const auto w = dot.find("width=", pos);
        return std::stod(dot.substr(w + 6));
    };
    CHECK(width_of("1") > width_of("2"));
    CHECK(width_of("1") == width_of("3"));
}

TEST_CASE("weighted edges carry labels in DOT") {
    const Graph g = parse_edge_list("a b 2.5\nb c 1");
    const PartitionResult res = fiedler_baseline(g);
    const std::string dot = io::partition_dot(g, res);
    CHECK(dot.find("[label=\"2.5\"]") != std::string::npos);
    CHECK(dot.find("\"b\" -- \"c\";") != std::string::npos); // unit weights unlabelled
}

TEST_CASE("vector parsing") {
    const Eigen::VectorXd v = io::parse_inline_vector("1,0.5, -2");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 1.0);
    CHECK(v[1] == 0.5);
    CHECK(v[2] == -2.0);
    CHECK(has_code([] { io::parse_inline_vector("1,x"); }, errc::parse_error));

    const Eigen::VectorXd f = io::parse_vector_file("# x0\n1.5\n\n-0.5\n2\n", 3);
    CHECK(f[0] == 1.5);
    CHECK(f[2] == 2.0);
    CHECK(has_code([] { io::parse_vector_file("1\n2\n", 3); }, errc::length_mismatch));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("cli");

TEST_CASE("partition command reproduces the karate clusters") {
    const CliOutput result = run_cli(base_config(cli::Command::partition, "builtin:karate"));
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    std::set<std::string> c1(doc["clusters"][0].begin(), doc["clusters"][0].end());
    std::set<std::string> c2(doc["clusters"][1].begin(), doc["clusters"][1].end());
    const std::set<std::string> paper{"1",  "2",  "3",  "4",  "5",  "6",  "7",  "8",
                                      "11", "12", "13", "14", "17", "18", "20", "22"};
    CHECK((c1 == paper || c2 == paper));
}

TEST_CASE("spectrum command on path3 prints {0,1,2}") {
    const CliOutput result = run_cli(base_config(cli::Command::spectrum, "builtin:path3"));
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["eigenvalues"][0].get<double>() == 0.0);
    CHECK(doc["eigenvalues"][1].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(doc["eigenvalues"][2].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("markov command reproduces the period-2 oscillation") {
    auto config = base_config(cli::Command::markov, "builtin:path3");
    config.p0 = "1,0,1";
    config.steps = 2;
    const CliOutput result = run_cli(config);
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    REQUIRE(doc["steps"].size() == 3);
    CHECK(doc["steps"][2] == nlohmann::json::parse("[1.0,0.0,1.0]"));
    CHECK(doc["aperiodic"] == false);
    CHECK(doc["irreducible"] == true);
}

TEST_CASE("partition output is byte-identical across seeds when m2 = 1") {
    auto config = base_config(cli::Command::partition, "builtin:karate");
    config.seed = 0;
    const CliOutput a = run_cli(config);
    config.seed = 12345;
    const CliOutput b = run_cli(config);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("kmeans command") {
    auto config = base_config(cli::Command::kmeans, "builtin:karate");
    config.k = 3;
    const CliOutput result = run_cli(config);
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["clusters"].size() == 3);
    std::size_t total = 0;
    for (const auto& cluster : doc["clusters"]) total += cluster.size();
    CHECK(total == 34);
}

TEST_CASE("simulate command emits CSV with a label header") {
    auto config = base_config(cli::Command::simulate, "builtin:path3");
    config.x0 = "1,0,-1";
    config.times = "0,1";
    config.format = cli::OutputFormat::csv;
    const CliOutput result = run_cli(config);
    REQUIRE(result.exit_code == 0);
    std::istringstream lines(result.out);
    std::string header, row0, row1;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    CHECK(header == "t,1,2,3");

    auto parse_row = [](const std::string& row) {
        std::vector<double> values;
        std::istringstream cells(row);
        std::string cell;
        while (std::getline(cells, cell, ',')) values.push_back(std::stod(cell));
        return values;
    };
    const auto at0 = parse_row(row0);
    REQUIRE(at0.size() == 4);
    CHECK(at0[0] == 0.0);
    CHECK(at0[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(at0[2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(at0[3] == doctest::Approx(-1.0).epsilon(1e-12));
    // x(1) = e^{-1} [1,0,-1]
    const auto at1 = parse_row(row1);
    REQUIRE(at1.size() == 4);
    CHECK(at1[0] == 1.0);
    CHECK(at1[1] == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(at1[3] == doctest::Approx(-std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("diversity command on path3") {
    const CliOutput result = run_cli(base_config(cli::Command::diversity, "builtin:path3"));
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["entropy"].get<double>() == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    CHECK(doc["entropy_diversity"].get<double>() ==
          doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-10));
    CHECK(doc["inverse_simpson"].get<double>() == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("verify command passes on the karate network") {
    const CliOutput result = run_cli(base_config(cli::Command::verify, "builtin:karate"));
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("PASS PROP1") != std::string::npos);
    CHECK(result.out.find("PASS PROP2") != std::string::npos);
    CHECK(result.out.find("PASS PROP3") != std::string::npos);
    CHECK(result.out.find("PASS PROP4") != std::string::npos);
    CHECK(result.out.find("FAIL") == std::string::npos);
}

TEST_CASE("x0-dependent commands and random initial states") {
    auto config = base_config(cli::Command::partition, "builtin:star4");
    SUBCASE("multiplicity 2 without x0 fails with structured JSON") {
        const CliOutput result = run_cli(config);
        CHECK(result.exit_code == 1);
        const auto err = nlohmann::json::parse(result.err);
        CHECK(err["error"] == "InitialStateRequired");
    }
    SUBCASE("--x0 random is deterministic given the seed") {
        config.x0 = "random";
        config.seed = 7;
        const CliOutput a = run_cli(config);
        const CliOutput b = run_cli(config);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
        config.seed = 8;
        const CliOutput c = run_cli(config);
        REQUIRE(c.exit_code == 0); // clusters may differ, the run must succeed
    }
    SUBCASE("inline x0 works") {
        config.x0 = "0.4,1,-0.3,-0.2";
        const CliOutput result = run_cli(config);
        REQUIRE(result.exit_code == 0);
        const auto doc = nlohmann::json::parse(result.out);
        CHECK(doc["multiplicity"] == 2);
    }
    SUBCASE("x0 file is read in node order") {
        const std::string path = "/tmp/opinet_test_x0.txt";
        {
            std::ofstream out(path);
            out << "# x0\n0.4\n1.0\n-0.3\n-0.2\n";
        }
        config.x0 = path;
        const CliOutput from_file = run_cli(config);
        config.x0 = "0.4,1,-0.3,-0.2";
        const CliOutput inline_spec = run_cli(config);
        REQUIRE(from_file.exit_code == 0);
        CHECK(from_file.out == inline_spec.out);
    }
}

TEST_CASE("error handling and exit codes") {
    SUBCASE("unknown dataset is a validation error") {
        const CliOutput result = run_cli(base_config(cli::Command::partition, "builtin:nope"));
        CHECK(result.exit_code == 1);
        CHECK(nlohmann::json::parse(result.err)["error"] == "UnknownDataset");
    }
    SUBCASE("missing file is a validation error") {
        const CliOutput result =
            run_cli(base_config(cli::Command::partition, "/nonexistent/graph.edges"));
        CHECK(result.exit_code == 1);
        CHECK(nlohmann::json::parse(result.err)["error"] == "IoError");
    }
    SUBCASE("disconnected input is rejected") {
        const std::string path = "/tmp/opinet_test_disconnected.edges";
        {
            std::ofstream out(path);
            out << "1 2\n3 4\n";
        }
        const CliOutput result = run_cli(base_config(cli::Command::spectrum, path));
        CHECK(result.exit_code == 1);
        CHECK(nlohmann::json::parse(result.err)["error"] == "Disconnected");
    }
    SUBCASE("csv is not a partition format") {
        auto config = base_config(cli::Command::partition, "builtin:path3");
        config.format = cli::OutputFormat::csv;
        const CliOutput result = run_cli(config);
        CHECK(result.exit_code == 1);
    }
    SUBCASE("custom centrality file is honored") {
        const std::string path = "/tmp/opinet_test_rho.txt";
        {
            std::ofstream out(path);
            out << "1 2.0\n2 1.0\n3 2.0\n";
        }
        auto config = base_config(cli::Command::spectrum, "builtin:path3");
        config.centrality = CentralityKind::custom;
        config.centrality_file = path;
        const CliOutput result = run_cli(config);
        CHECK(result.exit_code == 0);

        config.centrality_file.clear();
        const CliOutput missing = run_cli(config);
        CHECK(missing.exit_code == 1);
    }
}

TEST_CASE("dot format through the CLI") {
    auto config = base_config(cli::Command::partition, "builtin:southern_women");
    config.format = cli::OutputFormat::dot;
    const CliOutput result = run_cli(config);
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("\"Katherina\"") != std::string::npos);
    CHECK(result.out.find("shape=square") != std::string::npos);
    CHECK(result.out.find("shape=circle") != std::string::npos);
}

TEST_CASE("tree command on karate") {
    auto config = base_config(cli::Command::tree, "builtin:karate");
    config.min_size = 4;
    const CliOutput result = run_cli(config);
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc["nodes"].size() == 34);
    REQUIRE(doc.contains("split"));
    CHECK(doc["children"].size() == 2);
}

TEST_SUITE_END();
