#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lucanomial::cli {

/// Parses and runs one CLI invocation. argv excludes the program name.
/// Returns the process exit code (0 pass, 1 refutation/reported error,
/// 2 usage, 3 internal error).
int run_cli(const std::vector<std::string>& argv, std::ostream& out);

}  // namespace lucanomial::cli
