#ifndef MPBN_CLI_HPP
#define MPBN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mpbn::cli {

/// Exit codes: property holds / computation done, property fails, usage or
/// input error (also a timeout, with a partial report).
inline constexpr int kOk = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpbn::cli

#endif  // MPBN_CLI_HPP
