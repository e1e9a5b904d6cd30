#pragma once

#include <string>
#include <vector>

namespace splinedict {

/// Runs the command-line frontend on the given arguments (program name
/// excluded). Returns the process exit code: 0 on success, 1 when a
/// certification or frame computation fails, 2 on invalid configuration,
/// 3 when pursuit stagnates (partial outputs are still written).
int run_cli(const std::vector<std::string>& args);

}  // namespace splinedict
