#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stratadiv::cli {

/// Runs one batch invocation. Returns the process exit code:
/// 0 success, 1 model/solver error (citation trail on err), 2 usage error.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace stratadiv::cli
