#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqlab::cli {

// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kVerdictFailure = 1,
  kUsageError = 2,
  kInternalError = 3,
};

struct SweepConfig {
  int m_min = 2;
  int m_max = 6;
  std::vector<std::string> checks;  // empty means all
  std::string output;               // empty means stdout
  std::string format = "json";      // json | csv
  int parallelism = 1;
};

// Throws UsageError when the range, format, checks or parallelism are invalid.
void validate(const SweepConfig& config);

// Runs the sweep and writes the aggregate to `out` (or config.output).
int run_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

// Entry point shared by the executable and the tests. args[0] is the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqlab::cli
