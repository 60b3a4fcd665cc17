#ifndef MRR_CLI_H_
#define MRR_CLI_H_

#include <ostream>

namespace mrr {

// Process exit statuses of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRegression = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitInvariant = 3;

// Entry point of the `mrr` tool with subcommands render, compare and masks.
// Never throws; errors are reported on `err` and mapped to exit statuses.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mrr

#endif  // MRR_CLI_H_
