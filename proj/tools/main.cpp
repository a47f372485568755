// Copyright 2026 The coset-qrc Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "coset_qrc/experiment.hpp"
#include "coset_qrc/version.hpp"

namespace {

int run_command(const std::string& config_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open config file: " << config_path << "\n";
    return 1;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: invalid JSON in " << config_path << ": " << e.what() << "\n";
    return 1;
  }
  try {
    const coset_qrc::ExperimentConfig config = coset_qrc::ExperimentConfig::from_json(j);
    const auto results = coset_qrc::run_experiment(config);
    for (const auto& r : results) {
      std::printf("train=%d method=%s e_f=%.6g train_r2=%.6g%s\n", r.training_length,
                  r.method.c_str(), r.e_f, r.train_r2, r.diverged ? " (diverged)" : "");
    }
    std::printf("results written to %s\n", config.output_dir.c_str());
    return 0;
  } catch (const coset_qrc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int table_command(const std::string& results_dir) {
  try {
    std::cout << coset_qrc::render_table(results_dir);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int trajectory_command(const std::string& map_name, int length, double r, double a, double b,
                       double x0, double x1) {
  try {
    coset_qrc::MapSpec spec;
    if (map_name == "logistic") {
      spec = coset_qrc::MapSpec::logistic(r, x0);
    } else if (map_name == "henon") {
      spec = coset_qrc::MapSpec::henon(a, b, x0, x1);
    } else {
      std::cerr << "error: --map must be logistic or henon\n";
      return 1;
    }
    for (double x : coset_qrc::generate_trajectory(spec, length)) {
      std::printf("%.17g\n", x);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabilizer-coset quantum reservoir computing simulator"};
  app.set_version_flag("--version", std::string(coset_qrc::kVersion));
  app.require_subcommand(1);

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "Run the experiment grid from a JSON config");
  run->add_option("--config", config_path, "Path to the JSON config (or a manifest.json)")
      ->required();

  std::string results_dir;
  CLI::App* table = app.add_subcommand("table", "Render the error table of a results directory");
  table->add_option("--results", results_dir, "Directory holding errors.csv")->required();

  std::string map_name = "logistic";
  int length = 100;
  double r = 3.9, a = 1.4, b = 0.3;
  double x0 = std::nan("");
  double x1 = 0.0;
  CLI::App* trajectory = app.add_subcommand("trajectory", "Print a reference map trajectory");
  trajectory->add_option("--map", map_name, "logistic or henon");
  trajectory->add_option("--length", length, "Number of values to print");
  trajectory->add_option("--r", r, "Logistic parameter r");
  trajectory->add_option("--a", a, "Henon parameter a");
  trajectory->add_option("--b", b, "Henon parameter b");
  trajectory->add_option("--x0", x0, "Initial value");
  trajectory->add_option("--x1", x1, "Second initial value (henon)");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    return run_command(config_path);
  }
  if (table->parsed()) {
    return table_command(results_dir);
  }
  if (std::isnan(x0)) {
    x0 = map_name == "henon" ? 0.0 : 0.5;
  }
  return trajectory_command(map_name, length, r, a, b, x0, x1);
}
