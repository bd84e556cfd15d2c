#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyspace::cli {

/// Dispatches a full command line (argv[0] is the program name).
/// Returns 0 on success, 1 on verification failure, 2 on usage or
/// validation errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, from an argument list without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyspace::cli
