#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plumbstein {

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kParseError = 2, kUnsupportedShape = 3 };

/// Runs one command line (args[0] is the program name). Results go to `out`
/// or the --output file, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plumbstein
