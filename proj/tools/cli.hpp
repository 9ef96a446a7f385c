#ifndef AMV_TOOLS_CLI_HPP
#define AMV_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace amv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, progress and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace amv::cli

#endif // AMV_TOOLS_CLI_HPP
