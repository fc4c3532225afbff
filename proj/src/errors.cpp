#include "opinet/errors.hpp"

namespace opinet {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::parse_error: return "ParseError";
        case errc::self_loop: return "SelfLoop";
        case errc::negative_weight: return "NegativeWeight";
        case errc::conflicting_edge: return "ConflictingDuplicateEdge";
        case errc::unknown_dataset: return "UnknownDataset";
        case errc::empty_node_set: return "EmptyNodeSet";
        case errc::invalid_node_index: return "InvalidNodeIndex";
        case errc::disconnected: return "Disconnected";
        case errc::degenerate: return "Degenerate";
        case errc::positivity_violation: return "PositivityViolation";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::convergence_failure: return "ConvergenceFailure";
        case errc::initial_state_required: return "InitialStateRequired";
        case errc::indecisive_partition: return "IndecisivePartition";
        case errc::divergent_diversity: return "DivergentDiversity";
        case errc::degenerate_clusters: return "DegenerateClusters";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace opinet
