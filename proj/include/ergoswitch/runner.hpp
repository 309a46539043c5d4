// Copyright 2026 The ergoswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "ergoswitch/config.hpp"
#include "ergoswitch/ergotropy.hpp"

namespace ergoswitch {

std::string version();

/// Exit codes shared by the runner and the CLI.
enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitResidual = 3 };

/// Oracle residuals above this fail a run.
inline constexpr double kOracleTolerance = 1e-8;
/// dW = dW_i + dW_c is re-checked on every emitted row.
inline constexpr double kLedgerTolerance = 1e-10;

struct RunRecord {
  double delta_rho = 0.0;        ///< NaN for d > 2
  std::vector<double> extras;    ///< aligned with RunResult::extra_columns
  DaemonicReport report;
  double residual_oracle = 0.0;  ///< NaN when no oracle applies
};

struct RunResult {
  RunConfig config;
  std::string oracle;  ///< empty when the scenario has no oracle
  std::vector<std::string> extra_columns;
  std::vector<RunRecord> records;
  double max_residual = 0.0;
  double max_ledger_defect = 0.0;
  int exit_code = kExitOk;
};

/// Evaluates every sweep point. Rows are ordered by the sweep variables.
RunResult run(const RunConfig& config);

std::string render_csv(const RunResult& result);
std::string render_json(const RunResult& result);

/// Writes results.csv and results.json into dir (created if missing).
void write_outputs(const RunResult& result, const std::string& dir);

/// Formats with 17 significant digits, independent of the C locale.
std::string format_number(double value);

}  // namespace ergoswitch
