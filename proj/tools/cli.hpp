#ifndef ORE_TOOLS_CLI_HPP
#define ORE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ore::cli {

/// Exit status of every subcommand.
enum ExitCode : int {
  ok = 0,
  usage_error = 1,
  not_desingularizable = 2,
  search_exhausted = 3,
};

/// Runs oredesing with argv[0] treated as the program name.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ore::cli

#endif  // ORE_TOOLS_CLI_HPP
