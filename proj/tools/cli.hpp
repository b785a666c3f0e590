#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permstat::cli {

/// Parses and executes one invocation.  args excludes the program name.
/// Exit status: 0 success or all checks passed, 1 verification failure,
/// 2 usage, parse, or input errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace permstat::cli
