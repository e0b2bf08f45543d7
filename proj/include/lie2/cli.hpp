#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lie2::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 mathematical failure, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lie2::cli
