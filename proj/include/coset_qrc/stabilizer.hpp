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

#ifndef COSET_QRC_STABILIZER_HPP_
#define COSET_QRC_STABILIZER_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coset_qrc/pauli.hpp"

namespace coset_qrc {

enum class StabilizerErrorKind {
  kEmpty,
  kSizeMismatch,
  kMinusIdentity,
  kNotCommuting,
  kDependent,
};

class StabilizerValidationError : public std::runtime_error {
 public:
  StabilizerValidationError(StabilizerErrorKind kind, std::string message, int index_a = -1,
                            int index_b = -1)
      : std::runtime_error(std::move(message)), kind_(kind), index_a_(index_a), index_b_(index_b) {}

  StabilizerErrorKind kind() const noexcept { return kind_; }
  // 0-based generator indices involved in the failure; -1 when not applicable.
  int index_a() const noexcept { return index_a_; }
  int index_b() const noexcept { return index_b_; }

 private:
  StabilizerErrorKind kind_;
  int index_a_;
  int index_b_;
};

// Syndrome encoded as a bit mask: bit j-1 set <=> generator j measured -1.
// Mask 0 is the all-+1 syndrome labelling the code space itself.
using SyndromeMask = std::uint32_t;

SyndromeMask mask_from_signs(const std::vector<int>& signs);
std::vector<int> signs_from_mask(SyndromeMask mask, int num_generators);

// One joint eigenspace of a Z-type stabilizer group: the syndrome label and
// the computational basis states spanning it.
struct CosetDescriptor {
  SyndromeMask syndrome = 0;
  std::vector<std::uint64_t> basis_states;
};

// Checks commutation, GF(2) independence and +1 phases; returns the
// generators unchanged on success, throws StabilizerValidationError otherwise.
std::vector<PauliString> validate_stabilizer(std::vector<PauliString> generators);

// Destabilizers F_j for a validated generator set: F_j anticommutes with s_j,
// commutes with every other s_i and with all earlier F_m. Deterministic for a
// given generator order (symplectic Gram-Schmidt, free variables zeroed).
std::vector<PauliString> compute_destabilizers(const std::vector<PauliString>& generators);

class StabilizerSpec {
 public:
  explicit StabilizerSpec(std::vector<PauliString> generators);

  // S = <Z_1, ..., Z_k> on num_qubits qubits.
  static StabilizerSpec single_z(int num_qubits, int num_generators);
  // S = <Z_1 Z_2, ..., Z_k Z_{k+1}> on num_qubits qubits.
  static StabilizerSpec chain_zz(int num_qubits, int num_generators);

  int num_qubits() const { return num_qubits_; }
  int num_generators() const { return static_cast<int>(generators_.size()); }
  std::size_t num_syndromes() const { return std::size_t{1} << generators_.size(); }

  const std::vector<PauliString>& generators() const { return generators_; }
  const std::vector<PauliString>& destabilizers() const { return destabilizers_; }

  // True when every generator is a plain Z string (diagonal in computational basis).
  bool is_z_type() const;

  // Product of the generators selected by the subset mask, ascending index.
  PauliString generator_product(SyndromeMask subset) const;

  // Correction operator Q(a): product of destabilizers over the -1 bits of the
  // syndrome, ascending index. Identity for the all-+1 syndrome.
  PauliString correction(SyndromeMask syndrome) const;
  PauliString correction(const std::vector<int>& signs) const;

  // Projector onto the coset with the given syndrome, prod_j (I + a_j s_j)/2.
  Eigen::MatrixXcd coset_projector(SyndromeMask syndrome) const;

  // Basis-state partition by syndrome; requires a Z-type group.
  std::vector<CosetDescriptor> enumerate_cosets() const;

 private:
  PauliString destabilizer_product(SyndromeMask mask) const;

  int num_qubits_ = 0;
  std::vector<PauliString> generators_;
  std::vector<PauliString> destabilizers_;
  std::vector<PauliString> correction_table_;
};

}  // namespace coset_qrc

#endif  // COSET_QRC_STABILIZER_HPP_
