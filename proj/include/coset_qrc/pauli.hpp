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

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coset_qrc {

// Operators and states above this qubit count refuse to materialize as dense
// 2^n x 2^n matrices.
inline constexpr int kDenseQubitLimit = 10;

// An n-qubit Pauli operator in binary-symplectic form:
//
//   P = i^phase * prod_q X_q^{x_q} Z_q^{z_q}
//
// Qubit 1 is the leftmost tensor factor, i.e. the most significant bit of a
// computational-basis index. The phase is a power of i tracked mod 4 over the
// X-before-Z normal form. A site with x_q = z_q = 1 stands for XZ = -iY, so
// the printed prefix differs from the stored phase by one factor of i per Y.
class PauliString {
 public:
  PauliString() = default;

  static PauliString identity(int num_qubits);
  // Single-letter Pauli ('X', 'Y' or 'Z') at a 1-based qubit index.
  static PauliString single(int num_qubits, int qubit, char letter);
  static PauliString from_bits(std::vector<std::uint8_t> x_bits, std::vector<std::uint8_t> z_bits,
                               int phase_power);
  // Accepts "[+|-][i]LL..L" with one letter per qubit from {I,X,Y,Z}, e.g.
  // "+ZZI", "-iXYZ", "XX". The prefix is the printed phase, not the stored
  // normal-form power.
  static PauliString parse(std::string_view text);

  int num_qubits() const { return static_cast<int>(x_.size()); }
  const std::vector<std::uint8_t>& x_bits() const { return x_; }
  const std::vector<std::uint8_t>& z_bits() const { return z_; }
  // Power of i over the X-before-Z normal form.
  int phase_power() const { return phase_; }
  // Power of i in the printed letter form (each Y folds in one i).
  int display_phase() const;

  bool is_identity() const;
  bool is_hermitian() const;
  bool commutes_with(const PauliString& other) const;

  PauliString operator*(const PauliString& other) const;
  bool operator==(const PauliString& other) const = default;

  std::string to_string() const;
  Eigen::MatrixXcd to_matrix() const;

 private:
  std::vector<std::uint8_t> x_;
  std::vector<std::uint8_t> z_;
  int phase_ = 0;
};

}  // namespace coset_qrc
