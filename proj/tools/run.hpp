#pragma once

#include <string>

#include "job.hpp"

namespace koszul::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kConfigError = 2, kBudgetExhausted = 3 };

struct RunResult {
  int exit_code = kOk;
  std::string output;
};

/// Runs one job. Configuration errors and budget exhaustion are reported in
/// the output with their exit codes rather than thrown.
RunResult run_job(const JobSpec& spec);

}  // namespace koszul::cli
