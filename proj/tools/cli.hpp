#pragma once

// Command-line front end. `run` is the whole program minus process exit so
// tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace braidberry::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, io_error = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidberry::cli
