#pragma once

#include <istream>
#include <string>
#include <vector>

namespace filterless::cli {

struct CommandResult {
  int exit_code = 0;  // 0 answer, 1 "no" from decide, 2 error
  std::string out;
  std::string err;
};

// Runs one command line (without the program name). `in` is read only with
// --stdin. Output goes to `out` unless --out names a file.
CommandResult run_command(const std::vector<std::string>& args,
                          std::istream& in);

}  // namespace filterless::cli
