#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace radrank {

/// Exit status of the command-line driver.
enum class ExitCode : int {
    computed = 0,  ///< the command ran (and a decision, if any, was positive)
    negative = 1,  ///< a decision command returned a negative verdict
    usage = 2,     ///< bad arguments, malformed input or unmet preconditions
};

/// Runs one invocation. `args` excludes the program name. Human-readable
/// output, or the Report JSON with --json, goes to `out`; diagnostics to `err`.
ExitCode run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radrank
