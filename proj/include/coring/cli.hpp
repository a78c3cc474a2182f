#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coring {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitInput = 2 };

/// The `coring` command line: check, construct, catalog. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coring
