#ifndef PFT_TOOLS_COMMANDS_HPP_
#define PFT_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace pft::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// Runs `pft <args...>` (args excludes the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pft::cli

#endif // PFT_TOOLS_COMMANDS_HPP_
