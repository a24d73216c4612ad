#ifndef SRGDIST_CLI_HPP
#define SRGDIST_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace srg {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    ExitOk = 0,
    ExitVerificationFailed = 1,
    ExitUsage = 2,
    ExitDisconnectedCover = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. Output is
/// deterministic: identical args and files give byte-identical streams.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace srg

#endif
