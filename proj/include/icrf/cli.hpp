#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icrf {

// Command-line front end. args excludes the program name. Exit codes:
// 0 success, 1 oracle violation, 2 input error, 3 regime mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icrf
