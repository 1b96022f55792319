#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burau {

/// Runs the command line (arguments without the program name). Documents go
/// to `out`, diagnostics to `err`. Returns 0 on success, 2 for parse and
/// precondition errors, 1 for failed verifications and invariant failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burau
