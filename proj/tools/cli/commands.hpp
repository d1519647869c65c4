#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kms::cli {

/// Runs one invocation. args excludes the program name.
/// Returns 0 on success, 1 when a check found violations, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kms::cli
