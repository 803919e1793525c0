#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmss::cli {

/// Runs one invocation. `args` excludes the program name. Returns the process
/// exit code: 0 success, 1 a property violation was found, 2 usage, parse or
/// precondition error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace lmss::cli
