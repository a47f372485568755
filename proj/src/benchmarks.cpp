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

#include "coset_qrc/benchmarks.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "coset_qrc/rng.hpp"

namespace coset_qrc {

MapSpec MapSpec::logistic(double r, double x0) {
  MapSpec spec;
  spec.kind = MapKind::kLogistic;
  spec.r = r;
  spec.init = {x0};
  return spec;
}

MapSpec MapSpec::henon(double a, double b, double x0, double x1) {
  MapSpec spec;
  spec.kind = MapKind::kHenon;
  spec.a = a;
  spec.b = b;
  spec.init = {x0, x1};
  return spec;
}

double map_step(const MapSpec& spec, const std::vector<double>& history) {
  if (history.size() != static_cast<std::size_t>(spec.memory())) {
    throw std::invalid_argument("map_step: history length must equal the map memory");
  }
  switch (spec.kind) {
    case MapKind::kLogistic:
      return spec.r * history[0] * (1.0 - history[0]);
    case MapKind::kHenon:
      return 1.0 - spec.a * history[0] * history[0] + spec.b * history[1];
  }
  throw std::logic_error("map_step: unknown map kind");
}

std::vector<double> generate_trajectory(const MapSpec& spec, int length) {
  const int m = spec.memory();
  if (spec.init.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("generate_trajectory: initial condition length mismatch");
  }
  if (length < m) {
    throw std::invalid_argument("generate_trajectory: length below the map memory");
  }
  std::vector<double> series(spec.init.begin(), spec.init.end());
  series.reserve(static_cast<std::size_t>(length));
  std::vector<double> history(static_cast<std::size_t>(m));
  while (series.size() < static_cast<std::size_t>(length)) {
    for (int d = 0; d < m; ++d) {
      history[static_cast<std::size_t>(d)] = series[series.size() - 1 - static_cast<std::size_t>(d)];
    }
    series.push_back(map_step(spec, history));
  }
  return series;
}

double map_error(const MapSpec& spec, const std::vector<double>& predicted) {
  const int m = spec.memory();
  if (predicted.size() < static_cast<std::size_t>(m + 1)) {
    throw std::invalid_argument("map_error: series shorter than memory + 1");
  }
  std::vector<double> history(static_cast<std::size_t>(m));
  double sum = 0.0;
  for (std::size_t i = static_cast<std::size_t>(m); i < predicted.size(); ++i) {
    for (int d = 0; d < m; ++d) {
      history[static_cast<std::size_t>(d)] = predicted[i - 1 - static_cast<std::size_t>(d)];
    }
    const double residual = predicted[i] - map_step(spec, history);
    sum += residual * residual;
  }
  return std::sqrt(sum);
}

EsnReservoir::EsnReservoir(const EsnConfig& config) : config_(config) {
  if (config.neurons < 1) {
    throw std::invalid_argument("esn: neuron count must be positive");
  }
  if (config.spectral_radius < 0.0 || config.spectral_radius >= 1.5) {
    throw std::invalid_argument("esn: spectral radius must lie in [0, 1.5)");
  }
  if (!(config.leak > 0.0) || config.leak > 1.0) {
    throw std::invalid_argument("esn: leak must lie in (0, 1]");
  }
  if (!std::isfinite(config.input_scale)) {
    throw std::invalid_argument("esn: input scale must be finite");
  }
  std::mt19937_64 rng(config.seed);
  const Eigen::Index n = config.neurons;
  w_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      w_(i, j) = uniform_double(rng, -1.0, 1.0);
    }
  }
  w_in_.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    w_in_(i) = config.input_scale * uniform_double(rng, -1.0, 1.0);
  }
  const double radius = w_.eigenvalues().cwiseAbs().maxCoeff();
  if (radius > 1e-12) {
    w_ *= config.spectral_radius / radius;
  } else {
    w_.setZero();
  }
  state_ = Eigen::VectorXd::Zero(n);
}

void EsnReservoir::reset() { state_.setZero(); }

Eigen::VectorXd EsnReservoir::step(double x) {
  state_ = (1.0 - config_.leak) * state_ +
           config_.leak * (w_ * state_ + w_in_ * x).array().tanh().matrix();
  return state_;
}

EsnRunResult esn_run_and_fit(const EsnConfig& config, const MapSpec& map,
                             const std::vector<double>& training_series, int l,
                             double ridge_lambda, int horizon) {
  const Eigen::Index length = static_cast<Eigen::Index>(training_series.size());
  if (length <= l) {
    throw std::invalid_argument("esn_run_and_fit: training series must exceed the timeplex depth");
  }
  EsnReservoir esn(config);
  std::vector<Eigen::VectorXd> step_values;
  step_values.reserve(training_series.size());
  for (double x : training_series) {
    step_values.push_back(esn.step(x));
  }
  const Eigen::MatrixXd all_rows = timeplex(step_values, l, true);
  const Eigen::Index train_rows = length - l;
  const Eigen::MatrixXd features = all_rows.topRows(train_rows);
  Eigen::VectorXd targets(train_rows);
  for (Eigen::Index i = 0; i < train_rows; ++i) {
    targets(i) = training_series[static_cast<std::size_t>(l + i)];
  }
  EsnRunResult result;
  result.weights = fit(features, targets, ridge_lambda);
  result.train_r2 = score_r2(features * result.weights.v, targets);

  std::vector<Eigen::VectorXd> window(step_values.end() - l, step_values.end());
  const Eigen::Index per_step = step_values[0].size();
  auto step = [&](double x) {
    window.erase(window.begin());
    window.push_back(esn.step(x));
    Eigen::VectorXd row(per_step * l + 1);
    for (int d = 0; d < l; ++d) {
      row.segment(d * per_step, per_step) = window[static_cast<std::size_t>(d)];
    }
    row(row.size() - 1) = 1.0;
    return row;
  };
  result.prediction = closed_loop_predict(all_rows.row(all_rows.rows() - 1).transpose(), step,
                                          result.weights, horizon);
  result.error = result.prediction.diverged
                     ? std::numeric_limits<double>::infinity()
                     : map_error(map, result.prediction.series);
  return result;
}

}  // namespace coset_qrc
