#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace diagcell::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, resource_cap = 2, usage_error = 3 };

// args excludes the program name. Reports go to out (or the --out file),
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diagcell::cli
