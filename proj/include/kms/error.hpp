#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kms {

enum class ErrorCode {
    size_out_of_range,
    parameter_out_of_range,
    vertex_out_of_range,
    malformed_length,
    byte_out_of_range,
    trailing_garbage,
    disconnected_input,
    max_iterations_exceeded,
    invalid_partition,
    invalid_spec,
    no_real_root,
    order_exceeds_cap,
    parity_mismatch,
    invalid_query,
    budget_exceeded,
    source_order_mismatch,
    empty_candidate_set,
    io_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace kms
