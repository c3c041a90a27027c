// Copyright 2026 The etpa-interferometry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   etpa run <scenario-file> [--out DIR]
//   etpa preset <name> --out DIR
//   etpa oracle-check <scenario-file> [--grid-points N]
//
// Exit codes: 0 success, 1 validation, 2 I/O, 3 internal invariant failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "etpa/etpa.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kIo = 2, kInternal = 3 };

struct Overrides {
  std::optional<std::size_t> grid_points;
  std::optional<double> delay_span_ps;
  std::optional<std::size_t> delay_points;

  void apply(etpa::Scenario& sc) const {
    if (grid_points) sc.grid_points = *grid_points;
    if (delay_span_ps) sc.delay_span_ps = *delay_span_ps;
    if (delay_points) sc.delay_points = *delay_points;
    sc.validate();
  }
};

void print_summary(const etpa::ScenarioRun& run, const std::filesystem::path& root) {
  std::cout << "wrote " << run.written.size() << " files under " << root.string() << "\n";
  for (const auto& [key, value] : run.metrics) {
    if (key.starts_with("distance.") || key.starts_with("tail_ratio.") || key.ends_with(".survival")) {
      std::cout << "  " << key << " = " << value << "\n";
    }
  }
}

int run_oracle_check(const etpa::Scenario& sc, std::size_t grid_points) {
  const auto rows = etpa::oracle_check(sc, grid_points);
  double worst = 0.0;
  for (const auto& row : rows) {
    std::printf("%-12s %-12s tau=%7.2f ps  closed=%.12e  oracle=%.12e  rel=%.2e\n",
                std::string(etpa::to_string(row.config)).c_str(), row.filter_set.c_str(), row.tau,
                row.closed_form, row.oracle, row.relative_error);
    worst = std::max(worst, row.relative_error);
  }
  const bool ok = worst <= etpa::kOracleTolerance;
  std::printf("%s: %zu comparisons on a %zux%zu grid, worst relative error %.2e (limit %.0e)\n",
              ok ? "PASS" : "FAIL", rows.size(), grid_points, grid_points, worst,
              etpa::kOracleTolerance);
  return ok ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-photon interferometry simulator: coincidence traces under one- and two-photon losses"};
  app.require_subcommand(1);

  Overrides overrides;
  auto add_overrides = [&](CLI::App* cmd) {
    cmd->add_option("--grid-points", overrides.grid_points, "Grid points per frequency axis (odd)");
    cmd->add_option("--delay-span-ps", overrides.delay_span_ps, "Half span of the delay axis in ps");
    cmd->add_option("--delay-points", overrides.delay_points, "Number of delay samples (odd)");
  };

  std::string scenario_path;
  std::string out_dir = ".";
  auto* run_cmd = app.add_subcommand("run", "Run a scenario file");
  run_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
  run_cmd->add_option("--out", out_dir, "Output root directory");
  add_overrides(run_cmd);

  std::string preset_name;
  auto* preset_cmd = app.add_subcommand("preset", "Run a built-in figure preset");
  preset_cmd->add_option("name", preset_name, "Preset name")
      ->required()
      ->check(CLI::IsMember(etpa::preset_names()));
  preset_cmd->add_option("--out", out_dir, "Output root directory")->required();
  add_overrides(preset_cmd);

  std::size_t oracle_points = 33;
  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare closed-form rates with the Fock oracle");
  oracle_cmd->add_option("scenario", scenario_path, "Scenario file")->required();
  add_overrides(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*run_cmd) {
      auto sc = etpa::load_scenario(scenario_path);
      overrides.apply(sc);
      const auto run = etpa::run_scenario(sc, out_dir);
      print_summary(run, out_dir);
    } else if (*preset_cmd) {
      auto sc = etpa::preset_scenario(preset_name);
      overrides.apply(sc);
      const std::filesystem::path root = out_dir;
      etpa::detail::write_file(root / "scenario.ini", etpa::serialize_scenario(sc));
      const auto run = etpa::run_scenario(sc, root);
      print_summary(run, root);
    } else if (*oracle_cmd) {
      auto sc = etpa::load_scenario(scenario_path);
      const auto requested = overrides.grid_points.value_or(oracle_points);
      overrides.grid_points.reset();
      overrides.apply(sc);
      return run_oracle_check(sc, requested);
    }
  } catch (const etpa::ScenarioError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const etpa::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
