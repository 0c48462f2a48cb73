#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line dispatch, exposed as a function so the test suite can drive
// it in-process. Exit codes: 0 success, 1 bad input, 2 a certification
// check failed, 3 a library invariant broke.

namespace cuspidal {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuspidal
