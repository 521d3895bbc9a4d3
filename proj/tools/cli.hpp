#pragma once

#include "bomc/caps.hpp"
#include "bomc/generator.hpp"
#include "bomc/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace bomc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kCapacityError = 3,
  kCheckFailed = 4,
};

struct RunConfig {
  std::string command;   // solve | certify | oracle | constants | gen
  std::string instance;  // file path or built-in fixture name
  Rat beta = Rat(4, 9);
  std::uint64_t seed = 0;
  Caps caps;
  std::string out;  // empty: stdout
  std::string format = "json";
  std::string family = "random";  // gen only
  GenParams gen;
};

struct RunOutput {
  int exit_code = kOk;
  std::string report;  // JSON or text; empty on error
  std::string error;
};

/// Executes one command. Never throws; failures map to exit codes.
RunOutput run(const RunConfig& config);

/// Argument parsing plus run(); writes the report to `out` (or --out) and
/// diagnostics to `err`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bomc::cli
