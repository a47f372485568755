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

#ifndef COSET_QRC_RESERVOIR_HPP_
#define COSET_QRC_RESERVOIR_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "coset_qrc/density_matrix.hpp"
#include "coset_qrc/ising.hpp"
#include "coset_qrc/readout.hpp"
#include "coset_qrc/stabilizer.hpp"

namespace coset_qrc {

enum class EncodingStrategy { kUniform, kExponential, kCustom };

struct EncodingConfig {
  EncodingStrategy strategy = EncodingStrategy::kExponential;
  std::vector<double> betas;
  double input_scale = 1.0;

  // beta_j = 1/2 for every generator.
  static EncodingConfig uniform(int num_generators, double input_scale = 1.0);
  // beta_j = 3^{j-1}/2, giving a gap-free frequency comb of width 3^k - 1.
  static EncodingConfig exponential(int num_generators, double input_scale = 1.0);
  static EncodingConfig custom(std::vector<double> betas, double input_scale = 1.0);
};

// Observable values of one time step: <prod_{j in A} s_j> for every nonempty
// subset A of generators, ordered by the subset's binary mask (1, 2, 3, ...).
struct ObservableRecord {
  int t = 0;
  std::vector<double> values;
};

struct ShotOptions {
  bool enabled = false;
  int shots = 10000;
  std::uint64_t seed = 0;
};

// The encoding channel on its own: applies prod_j exp(-i beta_j scale x F_j).
DensityMatrix encode(const DensityMatrix& state, double x, const StabilizerSpec& spec,
                     const EncodingConfig& enc);

// All attainable Fourier frequencies of x -> e^{-ixG} rho e^{ixG} with
// G = sum_j beta_j F_j: the pairwise differences of the 2^k signed beta sums.
std::vector<double> encoding_spectrum(const EncodingConfig& enc, const StabilizerSpec& spec);

// One reservoir: fixed stabilizer code, fixed Ising unitary, recurrent state.
// Each drive_step runs encode -> reservoir -> record observables -> ensemble
// syndrome measurement with (optional) coset correction.
class ReservoirInstance {
 public:
  ReservoirInstance(StabilizerSpec spec, IsingHamiltonian hamiltonian, EncodingConfig encoding,
                    bool correction_enabled = true, ShotOptions shot_options = {});

  const StabilizerSpec& spec() const { return spec_; }
  const IsingHamiltonian& hamiltonian() const { return hamiltonian_; }
  const EncodingConfig& encoding() const { return encoding_; }
  const Eigen::MatrixXcd& reservoir_unitary() const { return u_reservoir_; }
  const DensityMatrix& state() const { return state_; }
  bool correction_enabled() const { return correction_enabled_; }
  int num_observables() const { return static_cast<int>(spec_.num_syndromes()) - 1; }
  int time_index() const { return t_; }

  // Back to the initial code-space state and the initial shot stream.
  void reset();

  ObservableRecord drive_step(double x);

 private:
  Eigen::MatrixXcd encode_unitary(double x) const;
  std::vector<double> exact_values(const std::vector<double>& probs) const;
  std::vector<double> shot_values(const std::vector<double>& probs);

  StabilizerSpec spec_;
  IsingHamiltonian hamiltonian_;
  EncodingConfig encoding_;
  bool correction_enabled_;
  ShotOptions shot_options_;
  Eigen::MatrixXcd u_reservoir_;
  std::vector<Eigen::MatrixXcd> destabilizer_matrices_;
  std::vector<Eigen::MatrixXcd> kraus_;  // Q(a) Pi_a per syndrome (Pi_a when correction is off)
  DensityMatrix state_;
  std::mt19937_64 shot_rng_;
  int t_ = 0;
};

// Drives every reservoir through the common input sequence; records[r][t].
// Reservoirs are independent, so execution may be parallel without changing
// the output. num_threads < 1 means the global budget, 1 means sequential.
std::vector<std::vector<ObservableRecord>> drive_sequence(std::vector<ReservoirInstance>& ensemble,
                                                          const std::vector<double>& inputs,
                                                          int num_threads = 1);

// Per-step vectors concatenating all reservoirs' observables, reservoir-major.
std::vector<Eigen::VectorXd> concat_step_vectors(
    const std::vector<std::vector<ObservableRecord>>& records);

struct FeatureColumn {
  int reservoir = -1;         // -1 for the bias column
  std::uint32_t subset = 0;   // generator subset mask
  int lag = 0;                // steps back from the row's time index
  bool bias = false;
};

struct FeatureMatrix {
  Eigen::MatrixXd data;
  std::vector<FeatureColumn> columns;
};

// Temporal multiplexing over the recorded observables; rows cover
// t = l-1..T-1, each concatenating steps t-l+1..t (oldest first) across all
// reservoirs, plus a trailing bias column when enabled.
FeatureMatrix build_features(const std::vector<std::vector<ObservableRecord>>& records, int l,
                             bool include_bias);

// Autonomous continuation for a warmed ensemble. `window` holds the last l
// per-step vectors of the training drive, oldest first; include_bias must
// match the trained feature layout.
PredictionResult predict_closed_loop(std::vector<ReservoirInstance>& ensemble,
                                     std::vector<Eigen::VectorXd> window,
                                     const ReadoutWeights& weights, bool include_bias, int horizon);

}  // namespace coset_qrc

#endif  // COSET_QRC_RESERVOIR_HPP_
