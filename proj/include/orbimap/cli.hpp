#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbimap::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 malformed input or usage, 2 validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbimap::cli
