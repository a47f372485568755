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

#ifndef COSET_QRC_DENSITY_MATRIX_HPP_
#define COSET_QRC_DENSITY_MATRIX_HPP_

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "coset_qrc/pauli.hpp"
#include "coset_qrc/stabilizer.hpp"

namespace coset_qrc {

struct DensityMatrix {
  int num_qubits = 0;
  Eigen::MatrixXcd data;

  Eigen::Index dim() const { return data.rows(); }
};

struct StateValidity {
  double trace_error = 0.0;         // |Tr(rho) - 1|
  double hermiticity_defect = 0.0;  // max-abs of rho - rho^dag
  double min_eigenvalue = 0.0;      // of the hermitized matrix
};

StateValidity check_state(const DensityMatrix& rho);

// Pure state from the normalized projection of |0...0> onto the code space.
// Throws when |0...0> has no overlap with V_S.
DensityMatrix init_state(const StabilizerSpec& spec);

// exp(-i theta P) = cos(theta) I - i sin(theta) P for a Hermitian Pauli P.
Eigen::MatrixXcd pauli_rotation(double theta, const PauliString& p);

// U rho U^dag, verifying unitarity of u to 1e-10.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Eigen::MatrixXcd& u);

// Tr(P rho) for a Hermitian Pauli.
double expectation(const DensityMatrix& rho, const PauliString& p);

struct MeasurementBranch {
  SyndromeMask syndrome = 0;
  double probability = 0.0;
  DensityMatrix state;  // corrected back into V_S
};

// Projective measurement of all stabilizer generators followed by the
// syndrome-conditioned correction. Branches below probability 1e-14 are
// dropped; the returned probabilities sum to 1 up to that truncation.
std::vector<MeasurementBranch> measure_stabilizer_branches(const DensityMatrix& rho,
                                                           const StabilizerSpec& spec);

// Draws `shots` i.i.d. syndrome outcomes from the measurement distribution.
std::vector<SyndromeMask> sample_syndromes(const DensityMatrix& rho, const StabilizerSpec& spec,
                                           int shots, std::mt19937_64& rng);

}  // namespace coset_qrc

#endif  // COSET_QRC_DENSITY_MATRIX_HPP_
