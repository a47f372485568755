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

#include "coset_qrc/ising.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coset_qrc/density_matrix.hpp"
#include "coset_qrc/pauli.hpp"
#include "coset_qrc/rng.hpp"

namespace coset_qrc {

namespace {

void validate(const IsingHamiltonian& h) {
  const std::size_t n = static_cast<std::size_t>(h.num_qubits);
  if (h.num_qubits < 1 || h.num_qubits > kDenseQubitLimit) {
    throw std::invalid_argument("ising: qubit count out of range");
  }
  if (h.hx.size() != n || h.hy.size() != n || h.hz.size() != n) {
    throw std::invalid_argument("ising: field vectors must have one entry per site");
  }
  if (h.jz.size() != h.edges.size() || h.jx.size() != h.edges.size()) {
    throw std::invalid_argument("ising: coupling vectors must have one entry per edge");
  }
  if (h.trotter_steps < 1) {
    throw std::invalid_argument("ising: trotter_steps must be positive");
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : h.edges) {
    if (a < 1 || b < 1 || a > h.num_qubits || b > h.num_qubits) {
      throw std::invalid_argument("ising: edge site out of range");
    }
    if (a == b) {
      throw std::invalid_argument("ising: self-edge");
    }
    const auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("ising: duplicate edge");
    }
  }
}

}  // namespace

std::vector<std::pair<int, int>> all_to_all_edges(int num_qubits) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= num_qubits; ++a) {
    for (int b = a + 1; b <= num_qubits; ++b) {
      edges.emplace_back(a, b);
    }
  }
  return edges;
}

IsingHamiltonian sample_ising(int num_qubits, const std::vector<std::pair<int, int>>& edges,
                              std::mt19937_64& rng) {
  IsingHamiltonian h;
  h.num_qubits = num_qubits;
  h.edges = edges;
  const std::size_t n = static_cast<std::size_t>(num_qubits);
  h.hx.resize(n);
  h.hy.resize(n);
  h.hz.resize(n);
  for (auto& v : h.hx) v = uniform_double(rng, -0.5, 0.5);
  for (auto& v : h.hy) v = uniform_double(rng, -0.5, 0.5);
  for (auto& v : h.hz) v = uniform_double(rng, -0.5, 0.5);
  h.jz.resize(edges.size());
  h.jx.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    h.jz[e] = uniform_double(rng, -1.0, 1.0);
    h.jx[e] = uniform_double(rng, -1.0, 1.0);
  }
  validate(h);
  return h;
}

Eigen::MatrixXcd trotter_unitary(const IsingHamiltonian& h) {
  validate(h);
  const int n = h.num_qubits;
  const Eigen::Index dim = Eigen::Index{1} << n;
  const double dt_step = h.dt / h.trotter_steps;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (int step = 0; step < h.trotter_steps; ++step) {
    for (int i = 1; i <= n; ++i) {
      const std::size_t s = static_cast<std::size_t>(i - 1);
      u = pauli_rotation(dt_step * h.hx[s], PauliString::single(n, i, 'X')) * u;
      u = pauli_rotation(dt_step * h.hy[s], PauliString::single(n, i, 'Y')) * u;
      u = pauli_rotation(dt_step * h.hz[s], PauliString::single(n, i, 'Z')) * u;
    }
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      const auto& [a, b] = h.edges[e];
      const PauliString zz = PauliString::single(n, a, 'Z') * PauliString::single(n, b, 'Z');
      const PauliString xx = PauliString::single(n, a, 'X') * PauliString::single(n, b, 'X');
      u = pauli_rotation(dt_step * h.jz[e], zz) * u;
      u = pauli_rotation(dt_step * h.jx[e], xx) * u;
    }
  }
  return u;
}

}  // namespace coset_qrc
