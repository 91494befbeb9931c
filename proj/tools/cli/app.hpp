#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gpade::cli {

/// Parses argv, runs the subcommand and writes the report to `out` and diagnostics to
/// `err`. Returns 0 when every check passes, 1 when a check fails, 2 on usage or
/// hypothesis errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpade::cli
