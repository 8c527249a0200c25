#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kron {

/// Runs the command line `args` (program name excluded). Returns 0 on
/// success, 2 on invalid input and 1 on an internal failure; diagnostics go
/// to `err` as a single line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kron
