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

#include "coset_qrc/density_matrix.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "coset_qrc/rng.hpp"

namespace coset_qrc {

namespace {

constexpr double kBranchCutoff = 1e-14;

using Complex = std::complex<double>;

}  // namespace

StateValidity check_state(const DensityMatrix& rho) {
  StateValidity v;
  v.trace_error = std::abs(rho.data.trace() - Complex{1.0, 0.0});
  v.hermiticity_defect = (rho.data - rho.data.adjoint()).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd herm = 0.5 * (rho.data + rho.data.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  v.min_eigenvalue = solver.eigenvalues().minCoeff();
  return v;
}

DensityMatrix init_state(const StabilizerSpec& spec) {
  const Eigen::Index dim = Eigen::Index{1} << spec.num_qubits();
  Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(dim);
  ket(0) = 1.0;
  ket = spec.coset_projector(0) * ket;
  const double norm = ket.norm();
  if (norm < 1e-12) {
    throw std::invalid_argument("init_state: |0...0> has no overlap with the code space");
  }
  ket /= norm;
  DensityMatrix rho;
  rho.num_qubits = spec.num_qubits();
  rho.data = ket * ket.adjoint();
  return rho;
}

Eigen::MatrixXcd pauli_rotation(double theta, const PauliString& p) {
  if (!p.is_hermitian()) {
    throw std::invalid_argument("pauli_rotation: generator must be Hermitian");
  }
  const Eigen::Index dim = Eigen::Index{1} << p.num_qubits();
  const Eigen::MatrixXcd m = p.to_matrix();
  return std::cos(theta) * Eigen::MatrixXcd::Identity(dim, dim) -
         Complex{0.0, 1.0} * std::sin(theta) * m;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Eigen::MatrixXcd& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  }
  const double defect =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    throw std::invalid_argument("apply_unitary: matrix is not unitary");
  }
  DensityMatrix out;
  out.num_qubits = rho.num_qubits;
  out.data = u * rho.data * u.adjoint();
  return out;
}

double expectation(const DensityMatrix& rho, const PauliString& p) {
  if (!p.is_hermitian()) {
    throw std::invalid_argument("expectation: observable must be Hermitian");
  }
  if (p.num_qubits() != rho.num_qubits) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  return (p.to_matrix() * rho.data).trace().real();
}

std::vector<MeasurementBranch> measure_stabilizer_branches(const DensityMatrix& rho,
                                                           const StabilizerSpec& spec) {
  if (spec.num_qubits() != rho.num_qubits) {
    throw std::invalid_argument("measure_stabilizer_branches: dimension mismatch");
  }
  std::vector<MeasurementBranch> branches;
  for (SyndromeMask a = 0; a < spec.num_syndromes(); ++a) {
    const Eigen::MatrixXcd proj = spec.coset_projector(a);
    const Eigen::MatrixXcd projected = proj * rho.data * proj;
    const double p = projected.trace().real();
    if (p < kBranchCutoff) continue;
    const Eigen::MatrixXcd q = spec.correction(a).to_matrix();
    MeasurementBranch branch;
    branch.syndrome = a;
    branch.probability = p;
    branch.state.num_qubits = rho.num_qubits;
    branch.state.data = (q * projected * q.adjoint()) / p;
    branches.push_back(std::move(branch));
  }
  return branches;
}

std::vector<SyndromeMask> sample_syndromes(const DensityMatrix& rho, const StabilizerSpec& spec,
                                           int shots, std::mt19937_64& rng) {
  if (shots < 1) {
    throw std::invalid_argument("sample_syndromes: shots must be positive");
  }
  std::vector<double> cumulative;
  std::vector<SyndromeMask> labels;
  double total = 0.0;
  for (SyndromeMask a = 0; a < spec.num_syndromes(); ++a) {
    const Eigen::MatrixXcd proj = spec.coset_projector(a);
    const double p = (proj * rho.data).trace().real();
    if (p <= 0.0) continue;
    total += p;
    cumulative.push_back(total);
    labels.push_back(a);
  }
  std::vector<SyndromeMask> samples(static_cast<std::size_t>(shots));
  for (int m = 0; m < shots; ++m) {
    const double u = uniform_double(rng, 0.0, total);
    std::size_t idx = 0;
    while (idx + 1 < cumulative.size() && u > cumulative[idx]) ++idx;
    samples[static_cast<std::size_t>(m)] = labels[idx];
  }
  return samples;
}

}  // namespace coset_qrc
