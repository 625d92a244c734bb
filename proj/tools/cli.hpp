#ifndef FMELL_TOOLS_CLI_HPP
#define FMELL_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fmell::cli {

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// status: 0 success, 1 domain error, 2 parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmell::cli

#endif  // FMELL_TOOLS_CLI_HPP
