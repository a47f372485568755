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

#ifndef COSET_QRC_ISING_HPP_
#define COSET_QRC_ISING_HPP_

#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace coset_qrc {

// H = sum_i (hx_i X_i + hy_i Y_i + hz_i Z_i) + sum_{(i,j) in E} (jz ZZ + jx XX),
// evolved for time dt with a fixed number of first-order Trotter steps.
struct IsingHamiltonian {
  int num_qubits = 0;
  std::vector<double> hx, hy, hz;           // one per site
  std::vector<std::pair<int, int>> edges;   // 1-based (i, j), i < j
  std::vector<double> jz, jx;               // one per edge
  double dt = 1.645;
  int trotter_steps = 1;
};

// Complete graph on sites 1..n in lexicographic order.
std::vector<std::pair<int, int>> all_to_all_edges(int num_qubits);

// Fields from U(-1/2, 1/2), couplings from U(-1, 1); draw order is fixed
// (all hx, all hy, all hz, then jz and jx per edge) so seeds are portable.
IsingHamiltonian sample_ising(int num_qubits, const std::vector<std::pair<int, int>>& edges,
                              std::mt19937_64& rng);

// Product of exact Pauli rotations: per step, X/Y/Z rotations per site in
// index order, then ZZ and XX rotations per edge in lexicographic order.
Eigen::MatrixXcd trotter_unitary(const IsingHamiltonian& h);

}  // namespace coset_qrc

#endif  // COSET_QRC_ISING_HPP_
