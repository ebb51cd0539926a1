#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>

namespace sgw::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInvalidConfig = 2,
  kDiverged = 3,
};

using Settings = std::map<std::string, std::string>;

/// Flat `key = value` text, `#` starts a comment. Throws std::invalid_argument
/// on a malformed line.
Settings parse_config(std::istream& in);

/// Entry point of the `sgw` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgw::cli
