#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace numrad {

// Dispatches one command-line invocation (args excludes the program name).
// Reports go to `out`, diagnostics to `err`.  Returns the process exit code:
// 0 on success with all checked inequalities holding, 1 when a checked
// inequality is violated, 2 on usage or input-parse errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace numrad
