#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plc::cli {

/// Exit codes. Every check in the invocation passed iff the result is kOk.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kError = 2;
inline constexpr int kHypothesisFails = 3;

/// Runs one command line (args exclude the program name). Normal output goes
/// to `out` unless --out redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace plc::cli
