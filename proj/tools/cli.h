#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlrc::cli {

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "x^3+x+1", "x3+x+1" or "2x^2+1" into coefficients low-to-high.
/// Coefficients must lie in [0, p).
std::vector<unsigned> parse_polynomial(const std::string& text, unsigned p);

}  // namespace qlrc::cli
