#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace opinet {

enum class errc {
    parse_error,
    self_loop,
    negative_weight,
    conflicting_edge,
    unknown_dataset,
    empty_node_set,
    invalid_node_index,
    disconnected,
    degenerate,
    positivity_violation,
    length_mismatch,
    convergence_failure,
    initial_state_required,
    indecisive_partition,
    divergent_diversity,
    degenerate_clusters,
    invalid_argument,
    io_error,
};

/// Stable identifier used in CLI error JSON and test assertions.
const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Iterative solver gave up; carries the last iterate for diagnostics.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& message, std::vector<double> iterate, int iterations)
        : Error(errc::convergence_failure, message),
          last_iterate(std::move(iterate)),
          iterations_run(iterations) {}

    std::vector<double> last_iterate;
    int iterations_run;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace opinet
