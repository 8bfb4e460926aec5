#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monointerp::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    ok = 0,
    verification_failed = 1,
    usage_error = 2,
    domain_error = 3,
};

/// Environment variable naming a file that receives the JSON report of `verify`.
inline constexpr const char* report_env = "MONOINTERP_REPORT";

/// Runs the tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace monointerp::cli
