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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ergoswitch/config.hpp"
#include "ergoswitch/errors.hpp"
#include "ergoswitch/runner.hpp"
#include "ergoswitch/verify.hpp"

namespace {

using namespace ergoswitch;

int run_command(const std::string& path, const std::optional<std::string>& out,
                const std::optional<int>& points, const std::optional<std::uint64_t>& seed) {
  ConfigDocument doc = ConfigDocument::load(path);
  if (out) doc.set("output", "dir", *out);
  if (points) doc.set("sweep", "points", std::to_string(*points));
  if (seed) doc.set("run", "seed", std::to_string(*seed));
  const RunConfig config = RunConfig::from_document(doc);

  const RunResult result = run(config);
  write_outputs(result, config.output_dir);

  std::cout << "scenario " << to_string(config.scenario) << ": " << result.records.size()
            << " rows -> " << (std::filesystem::path(config.output_dir) / "results.csv").string()
            << '\n';
  if (!result.oracle.empty()) {
    std::cout << "oracle " << result.oracle << ": max residual "
              << format_number(result.max_residual) << '\n';
  }
  if (result.exit_code == kExitResidual) {
    std::cerr << "error: residual check failed (oracle " << format_number(result.max_residual)
              << ", ledger " << format_number(result.max_ledger_defect) << ")\n";
  }
  return result.exit_code;
}

int verify_command(const std::string& suite, std::uint64_t seed) {
  const VerifyReport report = verify(suite, seed);
  std::cout << report.to_json();
  return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Daemonic ergotropy under a quantum switch"};
  app.set_version_flag("--version", ergoswitch::version());
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<int> points;
  std::optional<std::uint64_t> run_seed;
  auto* run_cmd = app.add_subcommand("run", "Evaluate a scenario configuration");
  run_cmd->add_option("config", config_path, "Scenario configuration file")->required();
  run_cmd->add_option("--out", out_dir, "Output directory (overrides output.dir)");
  run_cmd->add_option("--points", points, "Sweep point count (overrides sweep.points)")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run_seed, "Random seed (overrides run.seed)");

  std::string suite;
  std::uint64_t verify_seed = 42;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  verify_cmd->add_option("suite", suite, "cptp | switch | ergotropy | oracles | all")
      ->required()
      ->check(CLI::IsMember(ergoswitch::verify_suites()));
  verify_cmd->add_option("--seed", verify_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ergoswitch::kExitValidation;
  }

  try {
    if (*run_cmd) return run_command(config_path, out_dir, points, run_seed);
    return verify_command(suite, verify_seed);
  } catch (const ergoswitch::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return ergoswitch::kExitValidation;
  } catch (const ergoswitch::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ergoswitch::kExitValidation;
  }
}
