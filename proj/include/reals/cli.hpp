// Command-line front end, separated from main() so tests can drive it.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reals {

// Exit codes: 0 success, 1 evaluation error, 2 parse error, 3 verification
// failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reals
