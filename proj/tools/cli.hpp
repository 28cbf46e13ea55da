#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framekit::cli {

/// Runs one CLI invocation (args excludes the program name) and writes the
/// report to out and diagnostics to err.
///
/// Exit codes: 0 the command succeeded and any checked property holds;
/// 1 the checked property fails; 2 malformed input (file, flags, domain);
/// 3 capacity or generation failure in a randomized construction.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framekit::cli
