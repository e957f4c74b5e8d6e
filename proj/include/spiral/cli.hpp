#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spiral {

/// Runs one invocation of the command-line tool; args exclude the program name.
/// Returns 0 on success, 1 for invalid flags, 2 for registry or validation failures,
/// 3 for internal invariant breaches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace spiral
