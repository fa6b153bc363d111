#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromspec::cli {

// Runs one CLI invocation. `args` excludes the program name; "-" inputs read
// from `in`. Returns the process exit code:
//   0 success, 1 fuzz violations, 2 usage/parse errors,
//   3 undefined bounds (edgeless input to `bounds`), 4 internal errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace chromspec::cli
