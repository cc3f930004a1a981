#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padic {

// Runs the command-line tool. `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`. Exit status: 0 all checks passed, 1 a claim
// failed (failing report printed), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic
