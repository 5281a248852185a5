#ifndef POWERSUM_CLI_HPP
#define POWERSUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace powersum {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Runs one CLI invocation (argv without the program name). Reports go to
/// `out`, diagnostics to `err`. Exit codes: 0 all checks passed, 1 at
/// least one conjecture violation or unexplained paper discrepancy,
/// 2 usage error, 3 internal invariant breach.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powersum

#endif
