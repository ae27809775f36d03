#pragma once

#include <string>
#include <vector>

#include "gwo/report.hpp"

namespace gwo {

/// One line of a command report. Status "info" lines carry derived facts
/// (characteristic groups, covering flags) and never affect the exit
/// code.
struct ReportEntry {
  std::string name;
  std::string status;  // "pass" | "fail" | "info"
  std::string detail;
  std::vector<CheckFailure> counterexamples;
};

/// Machine-readable result of one CLI invocation. Exit codes: 0 all
/// checks passed, 1 check failure or failed mathematical precondition,
/// 2 usage/parse/schema error.
struct CliReport {
  std::vector<std::string> command;
  std::vector<ReportEntry> entries;
  double elapsed_ms = 0.0;
  int exit_code = 0;
  std::string error;  // set for exit code 2 and precondition failures

  std::string to_text() const;
  std::string to_json() const;
};

/// Runs one subcommand (check, cover, to-xmod, to-internal, lift, equiv,
/// corr) against document files. argv excludes the program name. Never
/// throws; all failures are encoded in the report.
CliReport run_command(const std::vector<std::string>& argv);

}  // namespace gwo
