#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace bohrlab::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Compact single-line JSON with every floating-point number printed as %.17g.
std::string format_json(const nlohmann::ordered_json& j);

/// %.17g
std::string format_real(double x);

/// Runs the tool on argv (argv[0] is the program name); results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bohrlab::cli
