#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace osalg {

/// Runs the command-line front end. Exit codes: 0 success, 1 verification
/// failure, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osalg
