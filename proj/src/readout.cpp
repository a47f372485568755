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

#include "coset_qrc/readout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coset_qrc {

ReadoutWeights fit(const Eigen::MatrixXd& features, const Eigen::VectorXd& targets, double lambda) {
  if (features.rows() < 1) {
    throw std::invalid_argument("fit: no training rows");
  }
  if (features.rows() != targets.size()) {
    throw std::invalid_argument("fit: feature rows and target length differ");
  }
  if (!features.allFinite() || !targets.allFinite()) {
    throw std::invalid_argument("fit: non-finite inputs");
  }
  if (lambda < 0.0) {
    throw std::invalid_argument("fit: lambda must be nonnegative");
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(features, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  Eigen::VectorXd damped(sigma.size());
  if (lambda > 0.0) {
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      damped(i) = sigma(i) / (sigma(i) * sigma(i) + lambda);
    }
  } else {
    const double cutoff = sigma.size() == 0
                              ? 0.0
                              : sigma(0) * std::numeric_limits<double>::epsilon() *
                                    static_cast<double>(std::max(features.rows(), features.cols()));
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      damped(i) = sigma(i) > cutoff ? 1.0 / sigma(i) : 0.0;
    }
  }
  ReadoutWeights w;
  w.ridge_lambda = lambda;
  w.v = svd.matrixV() * damped.asDiagonal() * (svd.matrixU().transpose() * targets);
  return w;
}

double score_r2(const Eigen::VectorXd& predictions, const Eigen::VectorXd& targets) {
  if (predictions.size() != targets.size() || targets.size() == 0) {
    throw std::invalid_argument("score_r2: length mismatch or empty input");
  }
  const double mean = targets.mean();
  const double ss_tot = (targets.array() - mean).square().sum();
  if (ss_tot <= 0.0) {
    throw std::invalid_argument("score_r2: constant targets");
  }
  const double ss_res = (predictions - targets).squaredNorm();
  return 1.0 - ss_res / ss_tot;
}

std::pair<std::vector<double>, std::vector<double>> one_step_targets(
    const std::vector<double>& series) {
  if (series.size() < 2) {
    throw std::invalid_argument("one_step_targets: series too short");
  }
  std::vector<double> inputs(series.begin(), series.end() - 1);
  std::vector<double> targets(series.begin() + 1, series.end());
  return {std::move(inputs), std::move(targets)};
}

Eigen::MatrixXd timeplex(const std::vector<Eigen::VectorXd>& step_values, int l,
                         bool include_bias) {
  if (l < 1) {
    throw std::invalid_argument("timeplex: depth must be positive");
  }
  const Eigen::Index steps = static_cast<Eigen::Index>(step_values.size());
  if (steps < l) {
    throw std::invalid_argument("timeplex: fewer steps than the multiplex depth");
  }
  const Eigen::Index per_step = step_values.empty() ? 0 : step_values[0].size();
  for (const auto& v : step_values) {
    if (v.size() != per_step) {
      throw std::invalid_argument("timeplex: ragged step vectors");
    }
  }
  const Eigen::Index rows = steps - l + 1;
  const Eigen::Index cols = per_step * l + (include_bias ? 1 : 0);
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (int d = 0; d < l; ++d) {
      out.block(r, d * per_step, 1, per_step) =
          step_values[static_cast<std::size_t>(r + d)].transpose();
    }
    if (include_bias) {
      out(r, cols - 1) = 1.0;
    }
  }
  return out;
}

PredictionResult closed_loop_predict(Eigen::VectorXd current_features,
                                     const std::function<Eigen::VectorXd(double)>& step,
                                     const ReadoutWeights& weights, int horizon) {
  if (horizon < 1) {
    throw std::invalid_argument("closed_loop_predict: horizon must be positive");
  }
  if (current_features.size() != weights.v.size()) {
    throw std::invalid_argument("closed_loop_predict: feature/weight length mismatch");
  }
  PredictionResult result;
  result.series.reserve(static_cast<std::size_t>(horizon));
  for (int t = 0; t < horizon; ++t) {
    const double x_hat = weights.v.dot(current_features);
    result.series.push_back(x_hat);
    if (!std::isfinite(x_hat) || std::abs(x_hat) > kDivergenceLimit) {
      result.diverged = true;
      break;
    }
    if (t + 1 < horizon) {
      current_features = step(x_hat);
    }
  }
  return result;
}

}  // namespace coset_qrc
