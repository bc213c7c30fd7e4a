#pragma once

#include <string>
#include <vector>

namespace fewbody {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

struct CliOutcome {
  int exit_code = kExitOk;
  std::string artifact;  // report text (JSON or CSV)
  std::string out_path;  // empty: standard output
  std::string message;   // diagnostics for standard error
};

/// Parses and runs one command (arguments without the program name). No file I/O
/// except reading a --params file; the caller writes the artifact.
CliOutcome run_cli(const std::vector<std::string>& args);

}  // namespace fewbody
