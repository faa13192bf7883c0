#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trpca::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitUsage = 64;

/// Run the tool on argv without the program name. Reports that are not
/// written to a file go to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:step:b" to a, a + step, ..., up to b. Throws InvalidArgument when
/// malformed or empty.
std::vector<double> parse_range(const std::string& spec);

}  // namespace trpca::cli
