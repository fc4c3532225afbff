#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "opinet/cli.hpp"

namespace {

using opinet::CentralityKind;
using opinet::cli::Command;
using opinet::cli::OutputFormat;
using opinet::cli::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& config) {
    static const std::map<std::string, CentralityKind> kinds{
        {"degree", CentralityKind::degree},
        {"uniform", CentralityKind::uniform},
        {"eigenvector", CentralityKind::eigenvector},
        {"custom", CentralityKind::custom},
    };
    static const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::json},
        {"csv", OutputFormat::csv},
        {"dot", OutputFormat::dot},
    };
    cmd->add_option("--input", config.input,
                    "edge-list file or builtin:{karate,southern_women,path3,star4,complete(k)}")
        ->required();
    cmd->add_option("--centrality", config.centrality, "centrality weighting")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case))
        ->default_str("degree");
    cmd->add_option("--centrality-file", config.centrality_file,
                    "node/value pairs for --centrality custom");
    cmd->add_option("--eps-mult", config.eps_mult, "relative eigenvalue multiplicity tolerance")
        ->default_val(1e-8);
    cmd->add_option("--seed", config.seed, "RNG seed (k-means seeding, --x0 random)")
        ->default_val(0);
    cmd->add_option("--format", config.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("json");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Centrality-weighted opinion dynamics and network partition"};
    app.require_subcommand(1);

    RunConfig config;

    auto* partition = app.add_subcommand("partition", "disagreement-sign bipartition");
    add_common_options(partition, config);
    partition->add_option("--x0", config.x0,
                          "initial state: file, 'random', or inline a,b,c "
                          "(required when lambda_2 multiplicity > 1)");

    auto* tree = app.add_subcommand("tree", "iterative bipartition into multiple clusters");
    add_common_options(tree, config);
    tree->add_option("--min-size", config.min_size, "stop below this subgraph size")
        ->default_val(3);
    tree->add_option("--max-depth", config.max_depth, "recursion depth limit")->default_val(16);

    auto* kmeans = app.add_subcommand("kmeans", "K-means on the disagreement values");
    add_common_options(kmeans, config);
    config.k = 0;
    kmeans->add_option("--k", *config.k, "number of clusters")->required();
    kmeans->add_option("--x0", config.x0, "initial state (for multiplicity > 1)");

    auto* simulate = app.add_subcommand("simulate", "closed-form opinion trajectory");
    add_common_options(simulate, config);
    simulate->add_option("--x0", config.x0, "initial state: file, 'random', or inline")
        ->required();
    simulate->add_option("--tau", config.tau, "time constant")->default_val(1.0);
    simulate->add_option("--times", config.times, "explicit sample times t1,t2,...");
    simulate->add_option("--t-max", config.t_max, "grid end when --times absent")
        ->default_val(5.0);
    simulate->add_option("--samples", config.samples, "grid size when --times absent")
        ->default_val(51);

    auto* markov = app.add_subcommand("markov", "support-probability Markov chain");
    add_common_options(markov, config);
    markov->add_option("--p0", config.p0, "initial probabilities: file or inline a,b,c")
        ->required();
    markov->add_option("--steps", config.steps, "number of transitions")->default_val(10);

    auto* diversity = app.add_subcommand("diversity", "opinion diversity indices");
    add_common_options(diversity, config);
    diversity->add_option("--x0", config.x0, "initial state (for multiplicity > 1)");

    auto* spectrum = app.add_subcommand("spectrum", "eigensystem of the influence Laplacian");
    add_common_options(spectrum, config);
    spectrum->add_flag("--matrices", config.matrices, "include abar/lbar/s_matrix blocks");

    auto* verify = app.add_subcommand("verify", "run the Proposition 1-4 property checks");
    add_common_options(verify, config);

    CLI11_PARSE(app, argc, argv);

    if (partition->parsed()) config.command = Command::partition;
    if (tree->parsed()) config.command = Command::tree;
    if (kmeans->parsed()) config.command = Command::kmeans;
    if (simulate->parsed()) config.command = Command::simulate;
    if (markov->parsed()) config.command = Command::markov;
    if (diversity->parsed()) config.command = Command::diversity;
    if (spectrum->parsed()) config.command = Command::spectrum;
    if (verify->parsed()) config.command = Command::verify;
    if (!kmeans->parsed()) config.k.reset();

    return opinet::cli::run(config, std::cout, std::cerr);
}
