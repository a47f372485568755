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

#ifndef COSET_QRC_BENCHMARKS_HPP_
#define COSET_QRC_BENCHMARKS_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "coset_qrc/readout.hpp"

namespace coset_qrc {

enum class MapKind { kLogistic, kHenon };

// One-dimensional recurrences x_{n+1} = F(x_n, ..., x_{n-memory+1}):
// logistic F(x) = r x (1 - x); Henon F(x, y) = 1 - a x^2 + b y with y = x_{n-1}.
struct MapSpec {
  MapKind kind = MapKind::kLogistic;
  double r = 3.9;
  double a = 1.4;
  double b = 0.3;
  std::vector<double> init = {0.5};  // chronological, length = memory

  int memory() const { return kind == MapKind::kHenon ? 2 : 1; }

  static MapSpec logistic(double r = 3.9, double x0 = 0.5);
  static MapSpec henon(double a = 1.4, double b = 0.3, double x0 = 0.0, double x1 = 0.0);
};

// history is newest first: history[0] = x_n, history[1] = x_{n-1}.
double map_step(const MapSpec& spec, const std::vector<double>& history);

std::vector<double> generate_trajectory(const MapSpec& spec, int length);

// Map-consistency error of a predicted series: the root of the summed squared
// one-step residuals x_{i} - F(x_{i-1}, ...) over every applicable index.
double map_error(const MapSpec& spec, const std::vector<double>& predicted);

struct EsnConfig {
  int neurons = 100;
  double spectral_radius = 0.9;
  double input_scale = 0.5;
  double leak = 1.0;  // in (0, 1]
  std::uint64_t seed = 0;
};

// Leaky echo state network, h <- (1-leak) h + leak tanh(W h + w_in x), with
// the dense random recurrent matrix rescaled to the configured spectral radius.
class EsnReservoir {
 public:
  explicit EsnReservoir(const EsnConfig& config);

  const Eigen::VectorXd& state() const { return state_; }
  const Eigen::MatrixXd& recurrent_matrix() const { return w_; }

  void reset();
  Eigen::VectorXd step(double x);

 private:
  EsnConfig config_;
  Eigen::MatrixXd w_;
  Eigen::VectorXd w_in_;
  Eigen::VectorXd state_;
};

struct EsnRunResult {
  ReadoutWeights weights;
  double train_r2 = 0.0;
  PredictionResult prediction;
  double error = 0.0;  // E_F of the predicted segment; +inf when diverged
};

// The full classical pipeline on one training series: drive the ESN, timeplex
// the hidden states with depth l plus a bias column, fit the readout on
// one-step-ahead targets, continue closed-loop for `horizon` steps and score
// the result with map_error.
EsnRunResult esn_run_and_fit(const EsnConfig& config, const MapSpec& map,
                             const std::vector<double>& training_series, int l,
                             double ridge_lambda, int horizon);

}  // namespace coset_qrc

#endif  // COSET_QRC_BENCHMARKS_HPP_
