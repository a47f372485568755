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

#include "coset_qrc/stabilizer.hpp"

#include <string>
#include <utility>

namespace coset_qrc {

namespace {

constexpr int kEagerTableLimit = 20;  // 2^k correction entries precomputed up to here

// Symplectic row of a Pauli over variables [x_1..x_n, z_1..z_n]: the inner
// product <P, Q> = sum_q P.x Q.z + P.z Q.x picks up Q's x bits against P's z
// bits and vice versa, so the constraint row for "candidate anticommutes/
// commutes with P" stores P.z in the x-variable slots and P.x in the z slots.
std::vector<std::uint8_t> constraint_row(const PauliString& p) {
  const auto& x = p.x_bits();
  const auto& z = p.z_bits();
  const std::size_t n = x.size();
  std::vector<std::uint8_t> row(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    row[q] = z[q];
    row[n + q] = x[q];
  }
  return row;
}

std::vector<std::uint8_t> symplectic_bits(const PauliString& p) {
  const auto& x = p.x_bits();
  const auto& z = p.z_bits();
  const std::size_t n = x.size();
  std::vector<std::uint8_t> row(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    row[q] = x[q];
    row[n + q] = z[q];
  }
  return row;
}

// Solves A v = b over GF(2) via Gauss-Jordan, zeroing free variables. The
// systems built here are always consistent for validated generator sets.
std::vector<std::uint8_t> solve_gf2(std::vector<std::vector<std::uint8_t>> rows,
                                    std::vector<std::uint8_t> rhs, std::size_t num_vars) {
  const std::size_t m = rows.size();
  std::vector<int> pivot_col(m, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < num_vars && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[rank]);
    std::swap(rhs[pivot], rhs[rank]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r != rank && rows[r][col]) {
        for (std::size_t c = col; c < num_vars; ++c) rows[r][c] ^= rows[rank][c];
        rhs[r] ^= rhs[rank];
      }
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r) {
    if (rhs[r]) {
      throw std::logic_error("stabilizer: inconsistent GF(2) system");
    }
  }
  std::vector<std::uint8_t> solution(num_vars, 0);
  for (std::size_t r = 0; r < rank; ++r) {
    solution[static_cast<std::size_t>(pivot_col[r])] = rhs[r];
  }
  return solution;
}

}  // namespace

SyndromeMask mask_from_signs(const std::vector<int>& signs) {
  if (signs.size() > 32) {
    throw std::invalid_argument("syndrome: more than 32 generators unsupported");
  }
  SyndromeMask mask = 0;
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] == -1) {
      mask |= SyndromeMask{1} << j;
    } else if (signs[j] != 1) {
      throw std::invalid_argument("syndrome: signs must be +1 or -1");
    }
  }
  return mask;
}

std::vector<int> signs_from_mask(SyndromeMask mask, int num_generators) {
  std::vector<int> signs(static_cast<std::size_t>(num_generators), 1);
  for (int j = 0; j < num_generators; ++j) {
    if (mask & (SyndromeMask{1} << j)) signs[static_cast<std::size_t>(j)] = -1;
  }
  return signs;
}

std::vector<PauliString> validate_stabilizer(std::vector<PauliString> generators) {
  if (generators.empty()) {
    throw StabilizerValidationError(StabilizerErrorKind::kEmpty, "stabilizer: no generators given");
  }
  const int n = generators[0].num_qubits();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].num_qubits() != n) {
      throw StabilizerValidationError(
          StabilizerErrorKind::kSizeMismatch,
          "stabilizer: generator " + std::to_string(i + 1) + " acts on a different qubit count",
          static_cast<int>(i));
    }
    if (generators[i].display_phase() != 0) {
      throw StabilizerValidationError(
          StabilizerErrorKind::kMinusIdentity,
          "stabilizer: generator " + std::to_string(i + 1) + " (" + generators[i].to_string() +
              ") must carry a +1 phase so the group excludes -I",
          static_cast<int>(i));
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!generators[i].commutes_with(generators[j])) {
        throw StabilizerValidationError(
            StabilizerErrorKind::kNotCommuting,
            "stabilizer: generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                " anticommute",
            static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  // Row-reduce the symplectic bit rows in order; a row that cancels to zero
  // names the first generator dependent on its predecessors.
  std::vector<std::vector<std::uint8_t>> basis;
  std::vector<int> basis_pivot;
  const std::size_t num_vars = 2 * static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<std::uint8_t> row = symplectic_bits(generators[i]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t p = static_cast<std::size_t>(basis_pivot[b]);
      if (row[p]) {
        for (std::size_t c = 0; c < num_vars; ++c) row[c] ^= basis[b][c];
      }
    }
    int pivot = -1;
    for (std::size_t c = 0; c < num_vars; ++c) {
      if (row[c]) {
        pivot = static_cast<int>(c);
        break;
      }
    }
    if (pivot < 0) {
      throw StabilizerValidationError(
          StabilizerErrorKind::kDependent,
          "stabilizer: generator " + std::to_string(i + 1) + " is a product of earlier generators",
          static_cast<int>(i));
    }
    basis.push_back(std::move(row));
    basis_pivot.push_back(pivot);
  }
  return generators;
}

std::vector<PauliString> compute_destabilizers(const std::vector<PauliString>& generators) {
  const int n = generators[0].num_qubits();
  const std::size_t num_vars = 2 * static_cast<std::size_t>(n);
  std::vector<PauliString> destabilizers;
  destabilizers.reserve(generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<std::uint8_t> rhs;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      rows.push_back(constraint_row(generators[i]));
      rhs.push_back(i == j ? 1 : 0);
    }
    for (const PauliString& f : destabilizers) {
      rows.push_back(constraint_row(f));
      rhs.push_back(0);
    }
    const std::vector<std::uint8_t> v = solve_gf2(std::move(rows), std::move(rhs), num_vars);
    std::vector<std::uint8_t> x(v.begin(), v.begin() + n);
    std::vector<std::uint8_t> z(v.begin() + n, v.end());
    int n_y = 0;
    for (int q = 0; q < n; ++q) n_y += x[static_cast<std::size_t>(q)] & z[static_cast<std::size_t>(q)];
    destabilizers.push_back(PauliString::from_bits(std::move(x), std::move(z), n_y & 3));
  }
  return destabilizers;
}

StabilizerSpec::StabilizerSpec(std::vector<PauliString> generators)
    : generators_(validate_stabilizer(std::move(generators))) {
  num_qubits_ = generators_[0].num_qubits();
  destabilizers_ = compute_destabilizers(generators_);
  if (num_generators() <= kEagerTableLimit) {
    correction_table_.reserve(num_syndromes());
    for (SyndromeMask a = 0; a < num_syndromes(); ++a) {
      correction_table_.push_back(destabilizer_product(a));
    }
  }
}

StabilizerSpec StabilizerSpec::single_z(int num_qubits, int num_generators) {
  if (num_generators < 1 || num_generators > num_qubits) {
    throw std::invalid_argument("single_z preset needs 1 <= k <= n");
  }
  std::vector<PauliString> gens;
  for (int j = 1; j <= num_generators; ++j) {
    gens.push_back(PauliString::single(num_qubits, j, 'Z'));
  }
  return StabilizerSpec(std::move(gens));
}

StabilizerSpec StabilizerSpec::chain_zz(int num_qubits, int num_generators) {
  if (num_generators < 1 || num_generators > num_qubits - 1) {
    throw std::invalid_argument("chain_zz preset needs 1 <= k <= n-1");
  }
  std::vector<PauliString> gens;
  for (int j = 1; j <= num_generators; ++j) {
    gens.push_back(PauliString::single(num_qubits, j, 'Z') *
                   PauliString::single(num_qubits, j + 1, 'Z'));
  }
  return StabilizerSpec(std::move(gens));
}

bool StabilizerSpec::is_z_type() const {
  for (const PauliString& g : generators_) {
    for (std::uint8_t bit : g.x_bits()) {
      if (bit) return false;
    }
  }
  return true;
}

PauliString StabilizerSpec::generator_product(SyndromeMask subset) const {
  PauliString p = PauliString::identity(num_qubits_);
  for (int j = 0; j < num_generators(); ++j) {
    if (subset & (SyndromeMask{1} << j)) p = p * generators_[static_cast<std::size_t>(j)];
  }
  return p;
}

PauliString StabilizerSpec::destabilizer_product(SyndromeMask mask) const {
  PauliString p = PauliString::identity(num_qubits_);
  for (int j = 0; j < num_generators(); ++j) {
    if (mask & (SyndromeMask{1} << j)) p = p * destabilizers_[static_cast<std::size_t>(j)];
  }
  return p;
}

PauliString StabilizerSpec::correction(SyndromeMask syndrome) const {
  if (syndrome >= num_syndromes()) {
    throw std::invalid_argument("correction: syndrome out of range");
  }
  if (!correction_table_.empty()) return correction_table_[syndrome];
  return destabilizer_product(syndrome);
}

PauliString StabilizerSpec::correction(const std::vector<int>& signs) const {
  if (signs.size() != static_cast<std::size_t>(num_generators())) {
    throw std::invalid_argument("correction: wrong syndrome length");
  }
  return correction(mask_from_signs(signs));
}

Eigen::MatrixXcd StabilizerSpec::coset_projector(SyndromeMask syndrome) const {
  if (syndrome >= num_syndromes()) {
    throw std::invalid_argument("coset_projector: syndrome out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
  for (int j = 0; j < num_generators(); ++j) {
    const double sign = (syndrome & (SyndromeMask{1} << j)) ? -1.0 : 1.0;
    const Eigen::MatrixXcd s = generators_[static_cast<std::size_t>(j)].to_matrix();
    proj = 0.5 * (proj + sign * (s * proj));
  }
  return proj;
}

std::vector<CosetDescriptor> StabilizerSpec::enumerate_cosets() const {
  if (!is_z_type()) {
    throw std::invalid_argument("enumerate_cosets: basis spans exist only for Z-type groups");
  }
  const int n = num_qubits_;
  std::vector<CosetDescriptor> cosets(num_syndromes());
  for (SyndromeMask a = 0; a < num_syndromes(); ++a) cosets[a].syndrome = a;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    SyndromeMask a = 0;
    for (int j = 0; j < num_generators(); ++j) {
      const auto& z = generators_[static_cast<std::size_t>(j)].z_bits();
      int parity = 0;
      for (int q = 0; q < n; ++q) {
        // Qubit q+1 occupies bit n-1-q of the basis index (qubit 1 is the MSB).
        if (z[static_cast<std::size_t>(q)] && (b >> (n - 1 - q)) & 1) parity ^= 1;
      }
      if (parity) a |= SyndromeMask{1} << j;
    }
    cosets[a].basis_states.push_back(b);
  }
  return cosets;
}

}  // namespace coset_qrc
