#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "opinet/centrality.hpp"

namespace opinet::cli {

enum class Command { partition, tree, kmeans, simulate, markov, diversity, spectrum, verify };
enum class OutputFormat { json, csv, dot };

/// Fully resolved invocation; the CLI front end maps argv onto this.
struct RunConfig {
    Command command = Command::partition;
    std::string input;                         // path or "builtin:<name>"
    CentralityKind centrality = CentralityKind::degree;
    std::string centrality_file;               // required when centrality == custom
    double tau = 1.0;
    std::string x0;                            // path, "random", or inline "a,b,c"
    std::optional<int> k;                      // kmeans cluster count
    std::uint64_t seed = 0;
    double eps_mult = 1e-8;
    OutputFormat format = OutputFormat::json;

    // command-specific
    std::string p0;                            // markov: inline or path
    int steps = 10;                            // markov
    std::string times;                         // simulate: inline "t1,t2,..."
    double t_max = 5.0;                        // simulate grid when times empty
    int samples = 51;                          // simulate grid size
    bool matrices = false;                     // spectrum: include abar/lbar/s_matrix
    int min_size = 3;                          // tree
    int max_depth = 16;                        // tree
};

/// Executes one command, writing the artifact to `out` and structured JSON
/// errors to `err`. Returns the process exit code: 0 success, 1 validation
/// error, 2 computation error (including failed verify properties).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace opinet::cli
