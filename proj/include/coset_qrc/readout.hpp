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

#ifndef COSET_QRC_READOUT_HPP_
#define COSET_QRC_READOUT_HPP_

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace coset_qrc {

struct ReadoutWeights {
  Eigen::VectorXd v;
  double ridge_lambda = 0.0;
};

// Ridge-regularized least squares, argmin ||Fv - y||^2 + lambda ||v||^2,
// solved by SVD. lambda = 0 falls back to the minimum-norm solution with a
// relative singular-value cutoff, so rank deficiency never throws.
ReadoutWeights fit(const Eigen::MatrixXd& features, const Eigen::VectorXd& targets, double lambda);

// Coefficient of determination, 1 - SS_res / SS_tot. Constant targets are an error.
double score_r2(const Eigen::VectorXd& predictions, const Eigen::VectorXd& targets);

// One-step-ahead pairs: inputs x_1..x_{T-1}, targets x_2..x_T.
std::pair<std::vector<double>, std::vector<double>> one_step_targets(
    const std::vector<double>& series);

// Temporal multiplexing: row t (for t = l-1..T-1) concatenates the per-step
// value vectors of steps t-l+1..t, oldest first, plus a trailing all-ones
// bias column when requested.
Eigen::MatrixXd timeplex(const std::vector<Eigen::VectorXd>& step_values, int l, bool include_bias);

inline constexpr double kDivergenceLimit = 1e3;

struct PredictionResult {
  std::vector<double> series;
  bool diverged = false;
};

// Autonomous continuation: predict from the current feature row, feed the
// prediction back through `step` (which advances the reservoir and returns
// the next feature row), repeat for `horizon` steps. A non-finite prediction
// or one beyond kDivergenceLimit stops the loop with diverged = true; the
// partial series (including the offending value) is returned.
PredictionResult closed_loop_predict(Eigen::VectorXd current_features,
                                     const std::function<Eigen::VectorXd(double)>& step,
                                     const ReadoutWeights& weights, int horizon);

}  // namespace coset_qrc

#endif  // COSET_QRC_READOUT_HPP_
