#pragma once

#include <string>
#include <vector>

namespace apc::cli {

/// Dispatches one command line.  Exit codes: 0 success/agreement, 1 mismatch
/// or violated claim, 2 usage error, 3 budget exhausted.
int run(const std::vector<std::string>& args);

}  // namespace apc::cli
