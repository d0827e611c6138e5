#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prodwidth::cli {

/// Runs one CLI invocation. Exit codes: 0 success, 1 negative decision or
/// failed sweep, 2 usage/input error, 3 search budget exceeded.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace prodwidth::cli
