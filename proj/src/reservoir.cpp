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

#include "coset_qrc/reservoir.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "coset_qrc/parallel.hpp"
#include "coset_qrc/rng.hpp"

namespace coset_qrc {

namespace {

using Complex = std::complex<double>;

double parity(std::uint32_t subset, SyndromeMask syndrome) {
  return (std::popcount(subset & syndrome) & 1) ? -1.0 : 1.0;
}

void check_betas(const EncodingConfig& enc, const StabilizerSpec& spec) {
  if (enc.betas.size() != static_cast<std::size_t>(spec.num_generators())) {
    throw std::invalid_argument("encoding: one beta per stabilizer generator required");
  }
  for (double b : enc.betas) {
    if (!std::isfinite(b) || b == 0.0) {
      throw std::invalid_argument("encoding: betas must be finite and nonzero");
    }
  }
  if (!std::isfinite(enc.input_scale)) {
    throw std::invalid_argument("encoding: input_scale must be finite");
  }
}

}  // namespace

EncodingConfig EncodingConfig::uniform(int num_generators, double input_scale) {
  EncodingConfig enc;
  enc.strategy = EncodingStrategy::kUniform;
  enc.betas.assign(static_cast<std::size_t>(num_generators), 0.5);
  enc.input_scale = input_scale;
  return enc;
}

EncodingConfig EncodingConfig::exponential(int num_generators, double input_scale) {
  EncodingConfig enc;
  enc.strategy = EncodingStrategy::kExponential;
  enc.betas.resize(static_cast<std::size_t>(num_generators));
  double beta = 0.5;
  for (auto& b : enc.betas) {
    b = beta;
    beta *= 3.0;
  }
  enc.input_scale = input_scale;
  return enc;
}

EncodingConfig EncodingConfig::custom(std::vector<double> betas, double input_scale) {
  EncodingConfig enc;
  enc.strategy = EncodingStrategy::kCustom;
  enc.betas = std::move(betas);
  enc.input_scale = input_scale;
  return enc;
}

DensityMatrix encode(const DensityMatrix& state, double x, const StabilizerSpec& spec,
                     const EncodingConfig& enc) {
  check_betas(enc, spec);
  const Eigen::Index dim = state.dim();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (std::size_t j = 0; j < enc.betas.size(); ++j) {
    u = pauli_rotation(enc.betas[j] * enc.input_scale * x, spec.destabilizers()[j]) * u;
  }
  return apply_unitary(state, u);
}

std::vector<double> encoding_spectrum(const EncodingConfig& enc, const StabilizerSpec& spec) {
  check_betas(enc, spec);
  const int k = spec.num_generators();
  std::vector<double> eigenvalues;
  eigenvalues.reserve(std::size_t{1} << k);
  for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << k); ++signs) {
    double sum = 0.0;
    for (int j = 0; j < k; ++j) {
      sum += (signs & (std::uint32_t{1} << j)) ? -enc.betas[static_cast<std::size_t>(j)]
                                               : enc.betas[static_cast<std::size_t>(j)];
    }
    eigenvalues.push_back(sum);
  }
  std::vector<double> freqs;
  freqs.reserve(eigenvalues.size() * eigenvalues.size());
  for (double a : eigenvalues) {
    for (double b : eigenvalues) {
      freqs.push_back(a - b);
    }
  }
  std::sort(freqs.begin(), freqs.end());
  std::vector<double> unique;
  for (double f : freqs) {
    if (unique.empty() || std::abs(f - unique.back()) > 1e-9) {
      unique.push_back(f);
    }
  }
  return unique;
}

ReservoirInstance::ReservoirInstance(StabilizerSpec spec, IsingHamiltonian hamiltonian,
                                     EncodingConfig encoding, bool correction_enabled,
                                     ShotOptions shot_options)
    : spec_(std::move(spec)),
      hamiltonian_(std::move(hamiltonian)),
      encoding_(std::move(encoding)),
      correction_enabled_(correction_enabled),
      shot_options_(shot_options) {
  if (hamiltonian_.num_qubits != spec_.num_qubits()) {
    throw std::invalid_argument("reservoir: Hamiltonian and stabilizer qubit counts differ");
  }
  check_betas(encoding_, spec_);
  if (shot_options_.enabled && shot_options_.shots < 1) {
    throw std::invalid_argument("reservoir: shots must be positive");
  }
  u_reservoir_ = trotter_unitary(hamiltonian_);
  for (const PauliString& f : spec_.destabilizers()) {
    destabilizer_matrices_.push_back(f.to_matrix());
  }
  kraus_.reserve(spec_.num_syndromes());
  for (SyndromeMask a = 0; a < spec_.num_syndromes(); ++a) {
    Eigen::MatrixXcd k_a = spec_.coset_projector(a);
    if (correction_enabled_) {
      k_a = spec_.correction(a).to_matrix() * k_a;
    }
    kraus_.push_back(std::move(k_a));
  }
  state_ = init_state(spec_);
  shot_rng_.seed(shot_options_.seed);
}

void ReservoirInstance::reset() {
  state_ = init_state(spec_);
  shot_rng_.seed(shot_options_.seed);
  t_ = 0;
}

Eigen::MatrixXcd ReservoirInstance::encode_unitary(double x) const {
  const Eigen::Index dim = state_.dim();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (std::size_t j = 0; j < encoding_.betas.size(); ++j) {
    const double theta = encoding_.betas[j] * encoding_.input_scale * x;
    u = (std::cos(theta) * Eigen::MatrixXcd::Identity(dim, dim) -
         Complex{0.0, 1.0} * std::sin(theta) * destabilizer_matrices_[j]) *
        u;
  }
  return u;
}

std::vector<double> ReservoirInstance::exact_values(const std::vector<double>& probs) const {
  const std::uint32_t num_subsets = static_cast<std::uint32_t>(probs.size());
  std::vector<double> values;
  values.reserve(num_subsets - 1);
  for (std::uint32_t m = 1; m < num_subsets; ++m) {
    double v = 0.0;
    for (std::uint32_t a = 0; a < num_subsets; ++a) {
      v += parity(m, a) * probs[a];
    }
    values.push_back(v);
  }
  return values;
}

std::vector<double> ReservoirInstance::shot_values(const std::vector<double>& probs) {
  std::vector<double> cumulative(probs.size());
  double total = 0.0;
  for (std::size_t a = 0; a < probs.size(); ++a) {
    total += std::max(probs[a], 0.0);
    cumulative[a] = total;
  }
  const std::uint32_t num_subsets = static_cast<std::uint32_t>(probs.size());
  std::vector<double> sums(num_subsets - 1, 0.0);
  for (int m = 0; m < shot_options_.shots; ++m) {
    const double u = uniform_double(shot_rng_, 0.0, total);
    std::uint32_t a = 0;
    while (a + 1 < num_subsets && u > cumulative[a]) ++a;
    for (std::uint32_t s = 1; s < num_subsets; ++s) {
      sums[s - 1] += parity(s, a);
    }
  }
  for (double& v : sums) v /= shot_options_.shots;
  return sums;
}

ObservableRecord ReservoirInstance::drive_step(double x) {
  const Eigen::MatrixXcd w = u_reservoir_ * encode_unitary(x);
  const Eigen::MatrixXcd rho_prime = w * state_.data * w.adjoint();
  const std::size_t num_syn = spec_.num_syndromes();
  std::vector<double> probs(num_syn);
  Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(rho_prime.rows(), rho_prime.cols());
  for (std::size_t a = 0; a < num_syn; ++a) {
    const Eigen::MatrixXcd branch = kraus_[a] * rho_prime * kraus_[a].adjoint();
    probs[a] = branch.trace().real();
    next += branch;
  }
  state_.data = next;
  ObservableRecord record;
  record.t = t_++;
  record.values = shot_options_.enabled ? shot_values(probs) : exact_values(probs);
  return record;
}

std::vector<std::vector<ObservableRecord>> drive_sequence(std::vector<ReservoirInstance>& ensemble,
                                                          const std::vector<double>& inputs,
                                                          int num_threads) {
  if (ensemble.empty() || inputs.empty()) {
    throw std::invalid_argument("drive_sequence: empty ensemble or input series");
  }
  const int n = ensemble[0].spec().num_qubits();
  const int k = ensemble[0].spec().num_generators();
  for (const auto& res : ensemble) {
    if (res.spec().num_qubits() != n || res.spec().num_generators() != k) {
      throw std::invalid_argument("drive_sequence: mixed reservoir shapes");
    }
  }
  std::vector<std::vector<ObservableRecord>> records(ensemble.size());
  parallel_for(ensemble.size(), num_threads, [&](std::size_t r) {
    records[r].reserve(inputs.size());
    for (double x : inputs) {
      records[r].push_back(ensemble[r].drive_step(x));
    }
  });
  return records;
}

std::vector<Eigen::VectorXd> concat_step_vectors(
    const std::vector<std::vector<ObservableRecord>>& records) {
  if (records.empty() || records[0].empty()) {
    throw std::invalid_argument("concat_step_vectors: no records");
  }
  const std::size_t num_steps = records[0].size();
  const std::size_t per_reservoir = records[0][0].values.size();
  for (const auto& r : records) {
    if (r.size() != num_steps) {
      throw std::invalid_argument("concat_step_vectors: ragged record matrix");
    }
  }
  std::vector<Eigen::VectorXd> steps(num_steps);
  for (std::size_t t = 0; t < num_steps; ++t) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(records.size() * per_reservoir));
    Eigen::Index offset = 0;
    for (const auto& r : records) {
      for (double value : r[t].values) {
        v(offset++) = value;
      }
    }
    steps[t] = std::move(v);
  }
  return steps;
}

FeatureMatrix build_features(const std::vector<std::vector<ObservableRecord>>& records, int l,
                             bool include_bias) {
  FeatureMatrix fm;
  fm.data = timeplex(concat_step_vectors(records), l, include_bias);
  const std::uint32_t per_reservoir = static_cast<std::uint32_t>(records[0][0].values.size());
  for (int d = 0; d < l; ++d) {
    for (std::size_t r = 0; r < records.size(); ++r) {
      for (std::uint32_t m = 1; m <= per_reservoir; ++m) {
        FeatureColumn col;
        col.reservoir = static_cast<int>(r);
        col.subset = m;
        col.lag = l - 1 - d;
        fm.columns.push_back(col);
      }
    }
  }
  if (include_bias) {
    FeatureColumn col;
    col.bias = true;
    fm.columns.push_back(col);
  }
  return fm;
}

PredictionResult predict_closed_loop(std::vector<ReservoirInstance>& ensemble,
                                     std::vector<Eigen::VectorXd> window,
                                     const ReadoutWeights& weights, bool include_bias,
                                     int horizon) {
  if (window.empty()) {
    throw std::invalid_argument("predict_closed_loop: empty feature window");
  }
  const Eigen::Index per_step = window[0].size();
  for (const auto& v : window) {
    if (v.size() != per_step) {
      throw std::invalid_argument("predict_closed_loop: ragged feature window");
    }
  }
  Eigen::Index ensemble_width = 0;
  for (const auto& res : ensemble) ensemble_width += res.num_observables();
  if (ensemble_width != per_step) {
    throw std::invalid_argument("predict_closed_loop: window width does not match the ensemble");
  }
  const Eigen::Index l = static_cast<Eigen::Index>(window.size());
  auto current_row = [&]() {
    Eigen::VectorXd row(per_step * l + (include_bias ? 1 : 0));
    for (Eigen::Index d = 0; d < l; ++d) {
      row.segment(d * per_step, per_step) = window[static_cast<std::size_t>(d)];
    }
    if (include_bias) row(row.size() - 1) = 1.0;
    return row;
  };
  auto step = [&](double x) {
    Eigen::VectorXd next(per_step);
    Eigen::Index offset = 0;
    for (auto& res : ensemble) {
      const ObservableRecord rec = res.drive_step(x);
      for (double value : rec.values) next(offset++) = value;
    }
    window.erase(window.begin());
    window.push_back(std::move(next));
    return current_row();
  };
  return closed_loop_predict(current_row(), step, weights, horizon);
}

}  // namespace coset_qrc
