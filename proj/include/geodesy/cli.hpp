#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geodesy {

/// Runs one CLI invocation. Writes the JSON (or CSV) report to `out` and
/// usage errors to `err`. Returns 0 on success, 1 on domain errors (reported
/// as JSON on `out`), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace geodesy
