#include "kms/error.hpp"

namespace kms {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::size_out_of_range: return "size-out-of-range";
        case ErrorCode::parameter_out_of_range: return "parameter-out-of-range";
        case ErrorCode::vertex_out_of_range: return "vertex-out-of-range";
        case ErrorCode::malformed_length: return "malformed-length";
        case ErrorCode::byte_out_of_range: return "out-of-range-byte";
        case ErrorCode::trailing_garbage: return "trailing-garbage";
        case ErrorCode::disconnected_input: return "disconnected-input";
        case ErrorCode::max_iterations_exceeded: return "max-iterations-exceeded";
        case ErrorCode::invalid_partition: return "invalid-partition";
        case ErrorCode::invalid_spec: return "invalid-spec";
        case ErrorCode::no_real_root: return "no-real-root";
        case ErrorCode::order_exceeds_cap: return "order-exceeds-cap";
        case ErrorCode::parity_mismatch: return "parity-mismatch";
        case ErrorCode::invalid_query: return "invalid-query";
        case ErrorCode::budget_exceeded: return "budget-exceeded";
        case ErrorCode::source_order_mismatch: return "source-order-mismatch";
        case ErrorCode::empty_candidate_set: return "empty-candidate-set";
        case ErrorCode::io_error: return "io-error";
    }
    return "unknown";
}

}  // namespace kms
