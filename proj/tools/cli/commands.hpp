#pragma once

#include <functional>
#include <string>
#include <vector>

namespace capkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitSchema = 2;

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  ///< the output document, newline terminated
  std::string error;   ///< diagnostics for stderr
};

/// Names accepted by run().
const std::vector<std::string>& command_names();

/// Runs one command. `args` holds flags and input file paths ("-" is stdin);
/// `read_stdin` is called only when the command needs input and no file is given.
RunResult run(const std::string& command, const std::vector<std::string>& args,
              const std::function<std::string()>& read_stdin);

}  // namespace capkit::cli
