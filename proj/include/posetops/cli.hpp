#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetops {

/// Runs one command line (without the program name). Returns the process
/// exit status: 0 success, 1 validation or evaluation error, 2 usage error.
/// A FILE argument of "-" reads the poset from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace posetops
