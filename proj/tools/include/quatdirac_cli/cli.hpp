#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quatdirac::cli {

enum ExitCode : int { ok = 0, verification_failure = 1, usage_error = 2 };

/// Entry point shared by the executable and the tests.  args excludes the
/// program name.  Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatdirac::cli
