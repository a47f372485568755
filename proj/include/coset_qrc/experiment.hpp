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

#ifndef COSET_QRC_EXPERIMENT_HPP_
#define COSET_QRC_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coset_qrc/benchmarks.hpp"
#include "coset_qrc/reservoir.hpp"
#include "coset_qrc/stabilizer.hpp"

namespace coset_qrc {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("config field '" + field + "': " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct ExperimentConfig {
  MapSpec map;
  int n_qubits = 4;
  // "both" runs the single_z and chain_zz methods side by side; "custom"
  // takes the generators from custom_generators.
  std::string stabilizer_preset = "both";
  std::vector<std::string> custom_generators;
  int k_stabilizers = 3;
  int num_reservoirs = 20;
  int timeplex_depth = 10;
  std::string encoding = "exponential";
  std::vector<double> encoding_betas;  // used when encoding == "custom"
  double input_scale = 1.0;
  std::vector<int> training_lengths = {35, 68, 101, 134, 167};
  int horizon = 100;
  int shots = 0;  // 0 = exact expectation values
  double ridge_lambda = 1e-8;
  bool correction_enabled = true;
  std::string baseline = "esn";
  double esn_spectral_radius = 0.9;
  double esn_input_scale = 0.5;
  double esn_leak = 1.0;
  std::uint64_t master_seed = 1;
  std::string output_dir = "results";

  // Accepts either a bare config object or a manifest ({"config": {...}});
  // unknown keys are rejected so typos fail loudly.
  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  void validate() const;

  // Quantum method names for the preset, plus "classical" when the baseline
  // is enabled; also the method order of the output table.
  std::vector<std::string> methods() const;
  std::vector<std::string> quantum_methods() const;
};

StabilizerSpec build_spec(const ExperimentConfig& config, const std::string& method);
EncodingConfig build_encoding(const ExperimentConfig& config);

struct CellResult {
  int training_length = 0;
  std::string method;
  double e_f = 0.0;  // +inf when the closed loop diverged
  double train_r2 = 0.0;
  bool diverged = false;
  std::vector<double> predicted;
  std::vector<double> true_continuation;
};

CellResult run_quantum_cell(const ExperimentConfig& config, const std::string& method,
                            int training_length);
CellResult run_classical_cell(const ExperimentConfig& config, int training_length);

// Runs the full (training length x method) grid, writing per-cell prediction
// and Poincare files, errors.csv and manifest.json into config.output_dir.
// Cells execute in parallel under the COSET_QRC_THREADS budget; outputs do
// not depend on scheduling.
std::vector<CellResult> run_experiment(const ExperimentConfig& config);

void write_predictions_csv(const std::filesystem::path& path, int start_t,
                           const std::vector<double>& truth,
                           const std::vector<double>& predicted);
void write_poincare_csv(const std::filesystem::path& path, const std::vector<double>& series,
                        int memory);
void write_errors_csv(const std::filesystem::path& path, const std::vector<CellResult>& results);

// Renders <results_dir>/errors.csv as an aligned text table.
std::string render_table(const std::filesystem::path& results_dir);

}  // namespace coset_qrc

#endif  // COSET_QRC_EXPERIMENT_HPP_
