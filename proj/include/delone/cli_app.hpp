#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace delone {

// Full command-line front end, callable in-process so tests can capture the
// exact byte stream. Returns the process exit code: 0 success, 2 input error,
// 3 inconclusive regularity verdict, 4 unsupported dimension.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delone
