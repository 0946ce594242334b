#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotctl {

// Runs one knotctl command line (args excludes the program name). Returns
// the exit status: 0 success, 1 domain error, failed validation or truncated
// analysis, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotctl
