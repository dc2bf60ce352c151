#pragma once

#include <string>

#include "gzak/scenario.hpp"
#include "gzak/settings.hpp"

namespace gzak {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitOracleDisagreement = 3,
  kExitParse = 4,
};

enum class ReportFormat { structured, csv_fibers };

struct RunOptions {
  Settings settings;
  ReportFormat format = ReportFormat::structured;
  std::string subcommand;  // for "translation": weil, zak, fiberize, duality, analyze
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // report text (JSON or CSV), or a diagnostic on failure
  bool diagnostic = false;
};

/// Tolerance used by verify when comparing fiberwise bounds with the dense oracle.
inline constexpr double kOracleRelativeTolerance = 1e-8;

/// Runs one command against a parsed scenario. Commands: validate, zak, range,
/// length, member, frame, riesz, bracket, decompose, translation, verify.
/// Output is a pure function of (command, scenario, options minus threads).
RunResult run(const std::string& command, const Scenario& scenario, const RunOptions& options);

}  // namespace gzak
