#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wblocks::cli {

enum ExitCode { kOk = 0, kUsage = 1, kComputation = 2, kVerifyFailed = 3 };

// Runs one command line (without the program name). Results go to out,
// diagnostics to err; `recover` reads its input from in.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace wblocks::cli
